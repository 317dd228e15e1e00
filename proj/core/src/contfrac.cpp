// SPDX-License-Identifier: Apache-2.0
#include "cha/contfrac.hpp"

#include <stdexcept>
#include <utility>

namespace cha {

namespace {

void check_reduite_order(std::int64_t m, const Limits& limits) {
  if (m < 0) throw std::invalid_argument("reduite order must be nonnegative");
  if (m > limits.max_reduite_order) {
    throw ResourceLimitError("reduite order exceeds the configured maximum");
  }
}

}  // namespace

ConvergentStream::ConvergentStream(SeriesParams params, std::int64_t n)
    : params_(params), n_(n), alpha_(alpha(params, n)) {
  a_cur_ = 1;
  a_next_ = alpha_;
  b_cur_ = alpha_;
  b_next_ = BigInt(alpha_) * alpha_ + BigInt(params.p) * params.p;
}

void ConvergentStream::advance() {
  // X_{m+2} = alpha X_{m+1} + p^2 (m+2)^2 X_m, written into the retired slot.
  BigInt coef(params_.p);
  coef *= m_ + 2;
  coef *= coef;

  a_cur_ *= coef;
  mpz_addmul_ui(a_cur_.get_mpz_t(), a_next_.get_mpz_t(), static_cast<unsigned long>(alpha_));
  std::swap(a_cur_, a_next_);

  b_cur_ *= coef;
  mpz_addmul_ui(b_cur_.get_mpz_t(), b_next_.get_mpz_t(), static_cast<unsigned long>(alpha_));
  std::swap(b_cur_, b_next_);

  ++m_;
}

void ConvergentStream::advance_to(std::int64_t m) {
  if (m < m_) throw std::invalid_argument("ConvergentStream: cannot rewind");
  while (m_ < m) advance();
}

std::vector<ConvergentPair> convergents(SeriesParams params, std::int64_t n,
                                        std::int64_t m_max, const Limits& limits) {
  check_reduite_order(m_max, limits);
  std::vector<ConvergentPair> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  ConvergentStream stream(params, n);
  for (std::int64_t m = 0; m <= m_max; ++m) {
    out.push_back(stream.current());
    if (m < m_max) stream.advance();
  }
  return out;
}

Rational reduite(SeriesParams params, std::int64_t n, std::int64_t m, const Limits& limits) {
  check_reduite_order(m, limits);
  ConvergentStream stream(params, n);
  stream.advance_to(m);
  return stream.reduite();
}

BigInt determinant(SeriesParams params, std::int64_t n, std::int64_t m, const Limits& limits) {
  check_reduite_order(m, limits);
  ConvergentStream stream(params, n);
  stream.advance_to(m);
  return stream.a_next() * stream.b() - stream.a() * stream.b_next();
}

Rational Enclosure::midpoint() const { return (lo + hi) / Rational(2); }

Enclosure remainder_enclosure(SeriesParams params, std::int64_t n, std::int64_t m,
                              const Limits& limits) {
  check_reduite_order(m, limits);
  ConvergentStream stream(params, n);
  stream.advance_to(m);
  Rational r0 = stream.reduite();
  Rational r1(stream.a_next(), stream.b_next());
  if (r1 < r0) std::swap(r0, r1);
  return {std::move(r0), std::move(r1), EnclosureTarget::remainder};
}

Enclosure sum_enclosure(SeriesParams params, std::int64_t n, std::int64_t m,
                        const Limits& limits) {
  return sum_enclosure_at(params, n, m, partial_sum(params, n, limits), limits);
}

Enclosure sum_enclosure_at(SeriesParams params, std::int64_t n, std::int64_t m,
                           const Rational& partial, const Limits& limits) {
  const Enclosure rem = remainder_enclosure(params, n, m, limits);
  // S = S^(n) + (-1)^(n+1) R^(n); the reflection swaps endpoints when n is even.
  if (n % 2 != 0) {
    return {partial + rem.lo, partial + rem.hi, EnclosureTarget::sum};
  }
  return {partial - rem.hi, partial - rem.lo, EnclosureTarget::sum};
}

}  // namespace cha
