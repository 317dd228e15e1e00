// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "cha/common.hpp"
#include "cha/integer.hpp"
#include "cha/rational.hpp"
#include "cha/series.hpp"

namespace cha {

// Convergent of the remainder's continued fraction at partial-sum order n
// and reduite order m: the reduite is a/b. a and b are the raw recurrence
// values, deliberately not reduced (the determinant identity and the b-growth
// bounds are statements about the raw integers).
struct ConvergentPair {
  std::int64_t n = 0;
  std::int64_t m = 0;
  BigInt a;
  BigInt b;
};

// Streams convergents (a_m, b_m) for fixed (params, n) in O(1) retained
// state. After construction the stream is positioned at m = 0; each
// advance() moves one order up. The successor pair (a_{m+1}, b_{m+1}) is
// always available, which is what enclosures and the determinant need.
class ConvergentStream {
 public:
  ConvergentStream(SeriesParams params, std::int64_t n);

  std::int64_t order() const { return m_; }
  const BigInt& a() const { return a_cur_; }
  const BigInt& b() const { return b_cur_; }
  const BigInt& a_next() const { return a_next_; }
  const BigInt& b_next() const { return b_next_; }

  void advance();
  void advance_to(std::int64_t m);

  ConvergentPair current() const { return {n_, m_, a_cur_, b_cur_}; }
  Rational reduite() const { return Rational(a_cur_, b_cur_); }

 private:
  SeriesParams params_;
  std::int64_t n_ = 0;
  std::int64_t m_ = 0;
  std::int64_t alpha_ = 0;
  BigInt a_cur_, a_next_;
  BigInt b_cur_, b_next_;
};

// Convergents for m = 0..m_max.
std::vector<ConvergentPair> convergents(SeriesParams params, std::int64_t n,
                                        std::int64_t m_max,
                                        const Limits& limits = default_limits());

// rho_m = a_m / b_m in lowest terms.
Rational reduite(SeriesParams params, std::int64_t n, std::int64_t m,
                 const Limits& limits = default_limits());

// a_{m+1} b_m - a_m b_{m+1}, computed from the recurrence values.
// Equals (-1)^(m+1) p^(2m+2) ((m+1)!)^2; that equality is a test, not an input.
BigInt determinant(SeriesParams params, std::int64_t n, std::int64_t m,
                   const Limits& limits = default_limits());

enum class EnclosureTarget {
  remainder,  // R^(n), the absolute series tail after rank n
  sum,        // S, the full series sum
};

// Certified rational interval containing the labeled quantity.
struct Enclosure {
  Rational lo;
  Rational hi;
  EnclosureTarget target = EnclosureTarget::sum;

  Rational width() const { return hi - lo; }
  Rational midpoint() const;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
};

// [min(rho_m, rho_{m+1}), max(rho_m, rho_{m+1})]; adjacency of the even- and
// odd-order convergent subsequences puts R^(n) strictly inside.
Enclosure remainder_enclosure(SeriesParams params, std::int64_t n, std::int64_t m,
                              const Limits& limits = default_limits());

// Maps the remainder enclosure through x -> partial_sum(n) + (-1)^(n+1) x,
// swapping endpoints when n is even.
Enclosure sum_enclosure(SeriesParams params, std::int64_t n, std::int64_t m,
                        const Limits& limits = default_limits());

// Same, reusing an already-computed partial sum (oracle and scan loops).
Enclosure sum_enclosure_at(SeriesParams params, std::int64_t n, std::int64_t m,
                           const Rational& partial, const Limits& limits = default_limits());

}  // namespace cha
