// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "cha/common.hpp"
#include "cha/rational.hpp"

namespace cha {

// Parameters (p, q) of the alternating series sum_k (-1)^k / (pk + q).
struct SeriesParams {
  std::int64_t p = 1;
  std::int64_t q = 1;

  SeriesParams(std::int64_t p_, std::int64_t q_);

  friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

// alpha = 2pn + p + 2q, the partial denominator of the remainder's
// continued fraction at partial-sum order n.
std::int64_t alpha(SeriesParams params, std::int64_t n);

// k-th term (-1)^k / (pk + q).
Rational term(SeriesParams params, std::int64_t k);

// Partial sum of the first n+1 terms.
Rational partial_sum(SeriesParams params, std::int64_t n,
                     const Limits& limits = default_limits());

// Incremental partial sums: advancing to n costs only the terms not yet
// added. Values agree exactly with partial_sum.
class PartialSumStream {
 public:
  explicit PartialSumStream(SeriesParams params) : params_(params) {}

  const Rational& advance_to(std::int64_t n, const Limits& limits = default_limits());
  std::int64_t order() const { return k_; }
  const Rational& current() const { return sum_; }

 private:
  SeriesParams params_;
  std::int64_t k_ = -1;
  Rational sum_;
};

}  // namespace cha
