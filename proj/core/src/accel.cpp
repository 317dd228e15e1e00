// SPDX-License-Identifier: Apache-2.0
#include "cha/accel.hpp"

#include <charconv>
#include <stdexcept>

#include "cha/contfrac.hpp"

namespace cha {

namespace {

void check_orders(std::int64_t m, std::int64_t n, const Limits& limits) {
  if (m < 0 || n < 0) throw std::invalid_argument("accel: orders must be nonnegative");
  if (m > limits.max_reduite_order) {
    throw ResourceLimitError("accel: reduite order exceeds the configured maximum");
  }
  if (n > limits.max_sum_order) {
    throw ResourceLimitError("accel: partial-sum order exceeds the configured maximum");
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  const __int128 v = static_cast<__int128>(a) * b;
  if (v > INT64_MAX) {
    throw ResourceLimitError("extractor: value overflows a 64-bit index");
  }
  return static_cast<std::int64_t>(v);
}

Rational signed_reduite(std::int64_t n, const Rational& rho) {
  return n % 2 == 0 ? -rho : rho;
}

}  // namespace

ExtractorSpec ExtractorSpec::linear(std::int64_t c) {
  if (c < 1) throw std::invalid_argument("extractor: linear coefficient must be >= 1");
  return {Form::linear, c};
}

ExtractorSpec ExtractorSpec::power(std::int64_t e) {
  if (e < 2) throw std::invalid_argument("extractor: power exponent must be >= 2");
  return {Form::power, e};
}

ExtractorSpec ExtractorSpec::geometric(std::int64_t base) {
  if (base < 2) throw std::invalid_argument("extractor: geometric base must be >= 2");
  return {Form::geometric, base};
}

ExtractorSpec ExtractorSpec::parse(std::string_view text) {
  auto suffix_value = [&](std::string_view prefix) -> std::int64_t {
    std::string_view rest = text.substr(prefix.size());
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw std::invalid_argument("extractor: cannot parse '" + std::string(text) + "'");
    }
    return value;
  };
  if (text == "identity") return identity();
  if (text == "square") return square();
  if (text == "cube") return cube();
  if (text == "linear") return linear(1);
  if (text.starts_with("linear")) return linear(suffix_value("linear"));
  if (text.starts_with("pow")) return power(suffix_value("pow"));
  if (text.starts_with("geom")) return geometric(suffix_value("geom"));
  throw std::invalid_argument("extractor: unknown form '" + std::string(text) + "'");
}

std::string ExtractorSpec::name() const {
  switch (form) {
    case Form::identity: return "identity";
    case Form::linear: return "linear" + std::to_string(parameter);
    case Form::square: return "square";
    case Form::cube: return "cube";
    case Form::power: return "pow" + std::to_string(parameter);
    case Form::geometric: return "geom" + std::to_string(parameter);
  }
  return "?";
}

std::int64_t ExtractorSpec::evaluate(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("extractor: negative index");
  switch (form) {
    case Form::identity: return n;
    case Form::linear: return checked_mul(parameter, n);
    case Form::square: return checked_mul(n, n);
    case Form::cube: return checked_mul(checked_mul(n, n), n);
    case Form::power: {
      std::int64_t v = 1;
      for (std::int64_t i = 0; i < parameter; ++i) v = checked_mul(v, n);
      return v;
    }
    case Form::geometric: {
      std::int64_t v = 1;
      for (std::int64_t i = 0; i < n; ++i) v = checked_mul(v, parameter);
      return v;
    }
  }
  throw std::logic_error("extractor: bad form");
}

bool ExtractorSpec::superlinear() const {
  switch (form) {
    case Form::square:
    case Form::cube:
    case Form::power:
    case Form::geometric:
      return true;
    case Form::identity:
    case Form::linear:
      return false;
  }
  return false;
}

Rational accel_value(SeriesParams params, std::int64_t m, std::int64_t n,
                     const Limits& limits) {
  check_orders(m, n, limits);
  return partial_sum(params, n, limits) + signed_reduite(n, reduite(params, n, m, limits));
}

std::vector<Rational> u_sequence(SeriesParams params, std::int64_t m, IndexRange n_range,
                                 const Limits& limits) {
  require_nonempty(n_range, "u_sequence");
  check_orders(m, n_range.last, limits);
  if (n_range.first < 0) throw std::invalid_argument("u_sequence: negative order");

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_range.count()));
  PartialSumStream sums(params);
  for (std::int64_t n = n_range.first; n <= n_range.last; ++n) {
    const Rational& s = sums.advance_to(n, limits);
    out.push_back(s + signed_reduite(n, reduite(params, n, m, limits)));
  }
  return out;
}

std::vector<Rational> v_sequence(SeriesParams params, std::int64_t n, IndexRange m_range,
                                 const Limits& limits) {
  require_nonempty(m_range, "v_sequence");
  check_orders(m_range.last, n, limits);
  if (m_range.first < 0) throw std::invalid_argument("v_sequence: negative order");

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m_range.count()));
  const Rational s = partial_sum(params, n, limits);
  ConvergentStream stream(params, n);
  stream.advance_to(m_range.first);
  for (std::int64_t m = m_range.first; m <= m_range.last; ++m) {
    out.push_back(s + signed_reduite(n, stream.reduite()));
    if (m < m_range.last) stream.advance();
  }
  return out;
}

Rational w_value(SeriesParams params, std::int64_t n, const Limits& limits) {
  return accel_value(params, n, n, limits);
}

std::vector<Rational> w_sequence(SeriesParams params, IndexRange n_range,
                                 const Limits& limits) {
  require_nonempty(n_range, "w_sequence");
  check_orders(n_range.last, n_range.last, limits);
  if (n_range.first < 0) throw std::invalid_argument("w_sequence: negative order");

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_range.count()));
  PartialSumStream sums(params);
  for (std::int64_t n = n_range.first; n <= n_range.last; ++n) {
    const Rational& s = sums.advance_to(n, limits);
    out.push_back(s + signed_reduite(n, reduite(params, n, n, limits)));
  }
  return out;
}

Rational w_zeta_value(SeriesParams params, const ExtractorSpec& zeta, std::int64_t n,
                      const Limits& limits) {
  const std::int64_t sum_order = zeta.evaluate(n);
  return accel_value(params, n, sum_order, limits);
}

Rational aitken_delta2(const Rational& x0, const Rational& x1, const Rational& x2) {
  const Rational second_difference = (x2 - x1) - (x1 - x0);
  if (second_difference.is_zero()) {
    throw std::domain_error("aitken_delta2: vanishing second difference");
  }
  return (x2 * x0 - x1 * x1) / second_difference;
}

std::vector<Rational> aitken_sequence(SeriesParams params, IndexRange n_range,
                                      const Limits& limits) {
  require_nonempty(n_range, "aitken_sequence");
  if (n_range.first < 2) throw std::invalid_argument("aitken_sequence: requires n >= 2");
  check_orders(0, n_range.last, limits);

  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n_range.count()));
  PartialSumStream sums(params);
  Rational x0 = sums.advance_to(n_range.first - 2, limits);
  Rational x1 = sums.advance_to(n_range.first - 1, limits);
  for (std::int64_t n = n_range.first; n <= n_range.last; ++n) {
    const Rational x2 = sums.advance_to(n, limits);
    out.push_back(aitken_delta2(x0, x1, x2));
    x0 = x1;
    x1 = x2;
  }
  return out;
}

}  // namespace cha
