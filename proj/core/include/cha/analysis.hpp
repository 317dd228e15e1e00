// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cha/accel.hpp"
#include "cha/common.hpp"
#include "cha/oracle.hpp"
#include "cha/series.hpp"

namespace cha {

// Which accelerated sequence a report is about.
struct AccelKind {
  enum class Tag { partial_sums, u, v, w, w_zeta };

  Tag tag = Tag::partial_sums;
  std::int64_t fixed_order = 0;  // m for u, n for v
  ExtractorSpec zeta{};

  static AccelKind partial_sums() { return {Tag::partial_sums, 0, {}}; }
  static AccelKind u(std::int64_t m) { return {Tag::u, m, {}}; }
  static AccelKind v(std::int64_t n) { return {Tag::v, n, {}}; }
  static AccelKind w() { return {Tag::w, 0, {}}; }
  static AccelKind w_zeta(ExtractorSpec zeta) { return {Tag::w_zeta, 0, zeta}; }

  std::string name() const;
};

// One measured point of a rate study. Ratios compare the errors of
// consecutive sequence values; bars come from the oracle enclosure. A point
// whose oracle resolution is too coarse is flagged indeterminate, never
// silently dropped or reported bare.
struct RatePoint {
  std::int64_t index = 0;
  double err_hi = 0.0;
  double ratio = 0.0;         // midpoint of the certified ratio interval
  double log10_ratio = 0.0;   // midpoint in log10
  double log10_lo = 0.0;      // certified bars
  double log10_hi = 0.0;
  bool indeterminate = false;
};

struct RateReport {
  AccelKind kind;
  SeriesParams params{1, 1};
  std::vector<RatePoint> points;
  std::int64_t oracle_digits = 0;
};

// Error ratios of consecutive values of the chosen sequence over
// index_range. oracle_digits = 0 picks a sufficient precision from the
// sequence's error equivalent and raises it until every point's error
// interval has relative width < 1e-3.
RateReport rate_report(SeriesParams params, const AccelKind& kind, IndexRange index_range,
                       std::int64_t oracle_digits = 0,
                       const Limits& limits = default_limits(),
                       OracleCache* cache = &OracleCache::global());

// One value of |x_i - S| scaled by the claimed asymptotic equivalent; the
// whole list should plateau near 1 when the equivalent is right.
struct CheckPoint {
  std::int64_t index = 0;
  double err_hi = 0.0;  // certified upper end of |x - S|
  double value = 0.0;   // midpoint of the normalized interval
  double lo = 0.0;      // certified bars
  double hi = 0.0;
  bool indeterminate = false;
};

struct EquivalentCheck {
  std::string formula;  // the normalizer, recorded for auditability
  std::vector<CheckPoint> points;
  double target = 1.0;
  std::int64_t oracle_digits = 0;
};

// 2pn |S^(n) - S|  ->  1.
EquivalentCheck theorem1_check(SeriesParams params, std::span<const std::int64_t> n_list,
                               const Limits& limits = default_limits(),
                               OracleCache* cache = &OracleCache::global());

// |u_m^(n) - S| (2n)^(2m+3) p / (m+1)!^2  ->  1. Requires m <= 6.
EquivalentCheck theorem2_check(SeriesParams params, std::int64_t m,
                               std::span<const std::int64_t> n_list,
                               const Limits& limits = default_limits(),
                               OracleCache* cache = &OracleCache::global());

// |v value at (n, m) - S| m^(2n+1+2q/p) plateaus at some omega > 0; the
// constant is estimated from the tail, never asserted against a reference.
struct Theorem3Fit {
  EquivalentCheck normalized;      // target is omega_estimate, not 1
  double omega_estimate = 0.0;     // average of the last third
  double tail_relative_spread = 0.0;
  bool plateau = false;            // spread of the last third < 10%
};

Theorem3Fit theorem3_fit(SeriesParams params, std::int64_t n,
                         std::span<const std::int64_t> m_list,
                         const Limits& limits = default_limits(),
                         OracleCache* cache = &OracleCache::global());

// Relative speed of the u- and v-directions at fixed order m: the error
// ratio behaves like n^(2(q/p - 1)), so its log-log slope classifies the
// trend by the sign of p - q.
struct TrendPoint {
  std::int64_t index = 0;
  double u_err = 0.0;
  double v_err = 0.0;
  double ratio = 0.0;
  double log10_ratio = 0.0;
  bool indeterminate = false;
};

enum class TrendClass { ratio_to_zero, ratio_bounded, ratio_diverges };

struct TrendReport {
  std::vector<TrendPoint> points;
  double slope = 0.0;            // fitted log-log slope
  double predicted_slope = 0.0;  // 2(q/p - 1)
  TrendClass classification = TrendClass::ratio_bounded;
  std::int64_t oracle_digits = 0;
};

TrendReport theorem4_check(SeriesParams params, std::int64_t m,
                           std::span<const std::int64_t> n_list,
                           const Limits& limits = default_limits(),
                           OracleCache* cache = &OracleCache::global());

// One-step log10 error ratio of the diagonal accelerator at order n, with
// certified bars. The oracle is raised until the error intervals have
// relative width below rel_width_target (default well inside the 1e-7 the
// estimate requires).
struct ChiEstimate {
  double log10_ratio = 0.0;
  double error_bars = 0.0;  // half-width of the certified log10 interval
  double log10_lo = 0.0;
  double log10_hi = 0.0;
  double chi = 0.0;  // 10^log10_ratio
  double chi_lo = 0.0;
  double chi_hi = 0.0;
  std::int64_t oracle_digits = 0;
};

ChiEstimate chi_estimate(SeriesParams params, std::int64_t n,
                         const Limits& limits = default_limits(),
                         OracleCache* cache = &OracleCache::global(),
                         double rel_width_target = 1e-8);

// Semi-extracted diagonal: normalized error against
// (pi/4p)(1/4e^2)^n (n/zeta(n))^(2n+3) -> 1, and consecutive error ratios
// -> 0 (strictly decreasing tail) when n = o(zeta(n)).
struct Theorem6Report {
  EquivalentCheck normalized;
  std::vector<RatePoint> ratios;
  bool ratios_strictly_decreasing = false;  // certified on the given points
  bool superlinear_hypothesis = false;      // zeta grows fast enough for the claim
};

Theorem6Report theorem6_check(SeriesParams params, const ExtractorSpec& zeta,
                              std::span<const std::int64_t> n_list,
                              const Limits& limits = default_limits(),
                              OracleCache* cache = &OracleCache::global());

// Fixed budget N = m + n: correct decimals of accel_value(N - n, n) across
// n = 1..N. The profile's argmax probes where the budget is best spent.
struct ScanPoint {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> digits;
};

struct BudgetScan {
  std::vector<ScanPoint> profile;
  std::vector<std::int64_t> argmax;  // all n achieving the maximum
  std::int64_t oracle_digits = 0;
};

BudgetScan budget_scan(SeriesParams params, std::int64_t total_order,
                       const Limits& limits = default_limits(),
                       OracleCache* cache = &OracleCache::global(),
                       int threads = 1);

// Correct decimals of the semi-extracted value at order n versus the plain
// diagonal at order zeta(k). Pure reporting.
struct ExtractionComparison {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t zeta_of_k = 0;
  std::optional<std::int64_t> digits_semi;
  std::optional<std::int64_t> digits_full;
  std::int64_t oracle_digits = 0;
};

ExtractionComparison semi_vs_full_extraction(SeriesParams params, const ExtractorSpec& zeta,
                                             std::int64_t n, std::int64_t k,
                                             const Limits& limits = default_limits(),
                                             OracleCache* cache = &OracleCache::global());

}  // namespace cha
