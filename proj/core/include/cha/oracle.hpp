// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "cha/common.hpp"
#include "cha/contfrac.hpp"
#include "cha/rational.hpp"
#include "cha/series.hpp"

namespace cha {

// Certified reference value of the series sum: a rational enclosure of
// guaranteed width, produced entirely by the integer convergent machinery.
// No floating point is involved anywhere in its construction.
struct ReferenceSum {
  SeriesParams params;
  Enclosure enclosure;
  std::int64_t guaranteed_digits = 0;
  std::int64_t order_used = 0;
};

// Diagonal enclosure at n = m = k, the fastest certified scheme available:
// roughly log10(4e^2) ~ 1.47 digits per step. Starts at
// k = ceil(target_digits / 1.4) + 8 and doubles k until the width is below
// 10^-target_digits.
ReferenceSum reference_sum(SeriesParams params, std::int64_t target_digits,
                           const Limits& limits = default_limits());

// The exact interval of possible |x - S| given only S in the enclosure.
// lo is zero iff x lies inside the enclosure.
struct ErrorInterval {
  Rational lo;
  Rational hi;

  // (hi - lo) / lo as a double; infinity when lo == 0.
  double relative_width() const;
};

ErrorInterval certified_error(const Rational& x, const ReferenceSum& ref);

// floor(-log10 |x - S|), i.e. correct decimals, when the error interval pins
// it down; nullopt when the oracle is too coarse to decide (caller should
// raise target_digits). Clamped at zero for errors >= 1.
std::optional<std::int64_t> digits_correct(const Rational& x, const ReferenceSum& ref);

// Process-wide reference cache keyed by (params, digits). Transparent:
// results are identical with the cache disabled. Safe for concurrent use.
class OracleCache {
 public:
  std::shared_ptr<const ReferenceSum> get_or_compute(SeriesParams params,
                                                     std::int64_t target_digits,
                                                     const Limits& limits = default_limits());
  void set_enabled(bool enabled);
  void clear();

  static OracleCache& global();

 private:
  std::mutex mutex_;
  bool enabled_ = true;
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>,
           std::shared_ptr<const ReferenceSum>>
      entries_;
};

// Shared lookup used by the analysis layer; cache may be null (no caching).
std::shared_ptr<const ReferenceSum> get_reference(SeriesParams params,
                                                  std::int64_t target_digits,
                                                  const Limits& limits = default_limits(),
                                                  OracleCache* cache = &OracleCache::global());

}  // namespace cha
