// SPDX-License-Identifier: Apache-2.0
#include "cha/series.hpp"

#include <stdexcept>
#include <string>

namespace cha {

namespace {

constexpr std::int64_t kMaxParam = 1'000'000'000;

std::int64_t checked_linear(std::int64_t a, std::int64_t k, std::int64_t b, const char* what) {
  const __int128 v = static_cast<__int128>(a) * k + b;
  if (v > INT64_MAX) throw std::overflow_error(std::string(what) + ": index too large");
  return static_cast<std::int64_t>(v);
}

}  // namespace

SeriesParams::SeriesParams(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("SeriesParams: p and q must be positive integers");
  }
  if (p > kMaxParam || q > kMaxParam) {
    throw std::invalid_argument("SeriesParams: p and q must not exceed 10^9");
  }
}

std::int64_t alpha(SeriesParams params, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("alpha: n must be nonnegative");
  return checked_linear(2 * params.p, n, params.p + 2 * params.q, "alpha");
}

Rational term(SeriesParams params, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("term: k must be nonnegative");
  const std::int64_t den = checked_linear(params.p, k, params.q, "term");
  return Rational(k % 2 == 0 ? 1 : -1, den);
}

Rational partial_sum(SeriesParams params, std::int64_t n, const Limits& limits) {
  PartialSumStream stream(params);
  return stream.advance_to(n, limits);
}

const Rational& PartialSumStream::advance_to(std::int64_t n, const Limits& limits) {
  if (n < 0) throw std::invalid_argument("partial_sum: n must be nonnegative");
  if (n > limits.max_sum_order) {
    throw ResourceLimitError("partial_sum: order exceeds the configured maximum");
  }
  if (n < k_) throw std::invalid_argument("PartialSumStream: cannot rewind");
  while (k_ < n) {
    ++k_;
    sum_ += term(params_, k_);
  }
  return sum_;
}

}  // namespace cha
