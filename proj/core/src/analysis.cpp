// SPDX-License-Identifier: Apache-2.0
#include "cha/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "cha/contfrac.hpp"

namespace cha {

namespace {

// Cushion added to log10 bars computed through double extraction of exact
// rationals; the extraction itself is good to ~1e-12 at our operand sizes.
constexpr double kLog10Cushion = 2e-9;

const double kLog10_4e2 = std::log10(4.0) + 2.0 / std::numbers::ln10;  // log10(4 e^2)

void check_increasing(std::span<const std::int64_t> list, std::int64_t min_allowed,
                      const char* what) {
  if (list.empty()) throw std::invalid_argument(std::string(what) + ": empty index list");
  std::int64_t prev = min_allowed - 1;
  for (const std::int64_t v : list) {
    if (v <= prev) {
      throw std::invalid_argument(std::string(what) + ": indices must be increasing and >= " +
                                  std::to_string(min_allowed));
    }
    prev = v;
  }
}

std::int64_t clamp_digits(double estimate, const Limits& limits) {
  const double bounded = std::min(estimate, static_cast<double>(limits.max_oracle_digits));
  return std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(bounded)));
}

struct ResolvedErrors {
  std::shared_ptr<const ReferenceSum> ref;
  std::vector<ErrorInterval> errors;
  std::vector<bool> indeterminate;
  bool all_resolved = false;
};

// Raises the oracle until every |value - S| interval has positive lower end
// and relative width below rel_target, or the digit guard is reached.
// Unresolved points come back flagged, never silently blank.
ResolvedErrors resolve_errors(SeriesParams params, std::span<const Rational> values,
                              std::int64_t start_digits, double rel_target,
                              const Limits& limits, OracleCache* cache) {
  ResolvedErrors out;
  std::int64_t digits = std::min(std::max<std::int64_t>(start_digits, 8),
                                 limits.max_oracle_digits);
  for (;;) {
    out.ref = get_reference(params, digits, limits, cache);
    out.errors.clear();
    out.indeterminate.assign(values.size(), false);
    out.all_resolved = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.errors.push_back(certified_error(values[i], *out.ref));
      if (out.errors.back().lo.is_zero() || out.errors.back().relative_width() >= rel_target) {
        out.indeterminate[i] = true;
        out.all_resolved = false;
      }
    }
    if (out.all_resolved || digits >= limits.max_oracle_digits) return out;
    digits = std::min(digits * 2, limits.max_oracle_digits);
  }
}

double mid_log10(const ErrorInterval& err) {
  return (approx_log10(err.lo) + approx_log10(err.hi)) / 2;
}

double fit_slope(const std::vector<std::pair<double, double>>& xy) {
  if (xy.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(xy.size());
  my /= static_cast<double>(xy.size());
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  return sxx == 0 ? 0.0 : sxy / sxx;
}

void parallel_for_index(std::int64_t count, int threads,
                        const std::function<void(std::int64_t)>& body) {
  const int usable = std::max(1, std::min<int>(threads, static_cast<int>(
                                  std::thread::hardware_concurrency() > 0
                                      ? std::thread::hardware_concurrency()
                                      : 1)));
  if (usable == 1 || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(usable));
  for (int t = 0; t < usable; ++t) {
    pool.emplace_back([&, t] {
      for (std::int64_t i = t; i < count; i += usable) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<Rational> w_zeta_values(SeriesParams params, const ExtractorSpec& zeta,
                                    std::span<const std::int64_t> n_list,
                                    const Limits& limits) {
  std::vector<Rational> values;
  values.reserve(n_list.size());
  PartialSumStream sums(params);
  for (const std::int64_t n : n_list) {
    const std::int64_t order = zeta.evaluate(n);
    if (n > limits.max_reduite_order) {
      throw ResourceLimitError("w_zeta: reduite order exceeds the configured maximum");
    }
    const Rational& s = sums.advance_to(order, limits);
    const Rational rho = reduite(params, order, n, limits);
    values.push_back(order % 2 == 0 ? s - rho : s + rho);
  }
  return values;
}

std::int64_t estimate_digits_for_kind(SeriesParams params, const AccelKind& kind,
                                      IndexRange range, const Limits& limits) {
  const double last = static_cast<double>(std::max<std::int64_t>(range.last, 2));
  const double p = static_cast<double>(params.p);
  const double q = static_cast<double>(params.q);
  double est = 16;
  switch (kind.tag) {
    case AccelKind::Tag::partial_sums:
      est = std::log10(2 * p * last) + 12;
      break;
    case AccelKind::Tag::u:
      est = (2 * static_cast<double>(kind.fixed_order) + 3) * std::log10(2 * last) + 12;
      break;
    case AccelKind::Tag::v:
      est = (2 * static_cast<double>(kind.fixed_order) + 1 + 2 * q / p) * std::log10(last) + 12;
      break;
    case AccelKind::Tag::w:
      est = 1.54 * last + 16;
      break;
    case AccelKind::Tag::w_zeta: {
      const double zl = static_cast<double>(kind.zeta.evaluate(range.last));
      est = 1.47 * last + (2 * last + 3) * std::max(0.0, std::log10(zl / last)) + 16;
      break;
    }
  }
  return clamp_digits(est, limits);
}

std::vector<Rational> sequence_values(SeriesParams params, const AccelKind& kind,
                                      IndexRange range, const Limits& limits) {
  switch (kind.tag) {
    case AccelKind::Tag::partial_sums: {
      std::vector<Rational> values;
      values.reserve(static_cast<std::size_t>(range.count()));
      PartialSumStream sums(params);
      for (std::int64_t n = range.first; n <= range.last; ++n) {
        values.push_back(sums.advance_to(n, limits));
      }
      return values;
    }
    case AccelKind::Tag::u:
      return u_sequence(params, kind.fixed_order, range, limits);
    case AccelKind::Tag::v:
      return v_sequence(params, kind.fixed_order, range, limits);
    case AccelKind::Tag::w:
      return w_sequence(params, range, limits);
    case AccelKind::Tag::w_zeta: {
      std::vector<std::int64_t> indices;
      indices.reserve(static_cast<std::size_t>(range.count()));
      for (std::int64_t n = range.first; n <= range.last; ++n) indices.push_back(n);
      return w_zeta_values(params, kind.zeta, indices, limits);
    }
  }
  throw std::logic_error("sequence_values: bad kind");
}

}  // namespace

std::string AccelKind::name() const {
  switch (tag) {
    case Tag::partial_sums: return "partial-sums";
    case Tag::u: return "u[m=" + std::to_string(fixed_order) + "]";
    case Tag::v: return "v[n=" + std::to_string(fixed_order) + "]";
    case Tag::w: return "w";
    case Tag::w_zeta: return "wzeta[" + zeta.name() + "]";
  }
  return "?";
}

RateReport rate_report(SeriesParams params, const AccelKind& kind, IndexRange index_range,
                       std::int64_t oracle_digits, const Limits& limits, OracleCache* cache) {
  require_nonempty(index_range, "rate_report");
  if (index_range.count() < 2) {
    throw std::invalid_argument("rate_report: need at least two points for ratios");
  }

  const std::vector<Rational> values = sequence_values(params, kind, index_range, limits);
  const std::int64_t start = oracle_digits > 0
                                 ? oracle_digits
                                 : estimate_digits_for_kind(params, kind, index_range, limits);
  const ResolvedErrors resolved = resolve_errors(params, values, start, 1e-3, limits, cache);

  RateReport report{kind, params, {}, resolved.ref->guaranteed_digits};
  for (std::size_t i = 1; i < values.size(); ++i) {
    RatePoint point;
    point.index = index_range.first + static_cast<std::int64_t>(i);
    point.indeterminate = resolved.indeterminate[i] || resolved.indeterminate[i - 1];
    point.err_hi = resolved.errors[i].hi.to_double();
    if (!point.indeterminate) {
      const Rational ratio_lo = resolved.errors[i].lo / resolved.errors[i - 1].hi;
      const Rational ratio_hi = resolved.errors[i].hi / resolved.errors[i - 1].lo;
      point.log10_lo = approx_log10(ratio_lo) - kLog10Cushion;
      point.log10_hi = approx_log10(ratio_hi) + kLog10Cushion;
      point.log10_ratio = (point.log10_lo + point.log10_hi) / 2;
      point.ratio = std::pow(10.0, point.log10_ratio);
    }
    report.points.push_back(point);
  }
  return report;
}

EquivalentCheck theorem1_check(SeriesParams params, std::span<const std::int64_t> n_list,
                               const Limits& limits, OracleCache* cache) {
  check_increasing(n_list, 1, "theorem1_check");

  std::vector<Rational> values;
  values.reserve(n_list.size());
  PartialSumStream sums(params);
  for (const std::int64_t n : n_list) values.push_back(sums.advance_to(n, limits));

  const double est = std::log10(2.0 * static_cast<double>(params.p) *
                                static_cast<double>(n_list.back())) + 12;
  const ResolvedErrors resolved =
      resolve_errors(params, values, clamp_digits(est, limits), 1e-3, limits, cache);

  EquivalentCheck check;
  check.formula = "2*p*n*|S^(n) - S|";
  check.oracle_digits = resolved.ref->guaranteed_digits;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    CheckPoint point;
    point.index = n_list[i];
    point.err_hi = resolved.errors[i].hi.to_double();
    point.indeterminate = resolved.indeterminate[i];
    if (!point.indeterminate) {
      const Rational factor(2 * params.p * n_list[i]);
      point.lo = (resolved.errors[i].lo * factor).to_double();
      point.hi = (resolved.errors[i].hi * factor).to_double();
      point.value = (point.lo + point.hi) / 2;
    }
    check.points.push_back(point);
  }
  return check;
}

EquivalentCheck theorem2_check(SeriesParams params, std::int64_t m,
                               std::span<const std::int64_t> n_list, const Limits& limits,
                               OracleCache* cache) {
  if (m < 0 || m > 6) {
    throw std::invalid_argument("theorem2_check: m must lie in [0, 6]");
  }
  check_increasing(n_list, m + 2, "theorem2_check");

  std::vector<Rational> values;
  values.reserve(n_list.size());
  PartialSumStream sums(params);
  for (const std::int64_t n : n_list) {
    const Rational& s = sums.advance_to(n, limits);
    const Rational rho = reduite(params, n, m, limits);
    values.push_back(n % 2 == 0 ? s - rho : s + rho);
  }

  const double est = (2 * static_cast<double>(m) + 3) *
                         std::log10(2.0 * static_cast<double>(n_list.back())) + 12;
  const ResolvedErrors resolved =
      resolve_errors(params, values, clamp_digits(est, limits), 1e-3, limits, cache);

  const BigInt fact2 = factorial(m + 1) * factorial(m + 1);
  EquivalentCheck check;
  check.formula = "|u_m^(n) - S| * (2n)^(2m+3) * p / (m+1)!^2";
  check.oracle_digits = resolved.ref->guaranteed_digits;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    CheckPoint point;
    point.index = n_list[i];
    point.err_hi = resolved.errors[i].hi.to_double();
    point.indeterminate = resolved.indeterminate[i];
    if (!point.indeterminate) {
      const Rational factor(BigInt(params.p) * ipow(BigInt(2 * n_list[i]), 2 * m + 3), fact2);
      point.lo = (resolved.errors[i].lo * factor).to_double();
      point.hi = (resolved.errors[i].hi * factor).to_double();
      point.value = (point.lo + point.hi) / 2;
    }
    check.points.push_back(point);
  }
  return check;
}

Theorem3Fit theorem3_fit(SeriesParams params, std::int64_t n,
                         std::span<const std::int64_t> m_list, const Limits& limits,
                         OracleCache* cache) {
  check_increasing(m_list, 1, "theorem3_fit");

  std::vector<Rational> values;
  values.reserve(m_list.size());
  const Rational s = partial_sum(params, n, limits);
  ConvergentStream stream(params, n);
  for (const std::int64_t m : m_list) {
    if (m > limits.max_reduite_order) {
      throw ResourceLimitError("theorem3_fit: reduite order exceeds the configured maximum");
    }
    stream.advance_to(m);
    const Rational rho = stream.reduite();
    values.push_back(n % 2 == 0 ? s - rho : s + rho);
  }

  const double exponent = 2.0 * static_cast<double>(n) + 1.0 +
                          2.0 * static_cast<double>(params.q) / static_cast<double>(params.p);
  const double est = exponent * std::log10(static_cast<double>(m_list.back())) + 12;
  const ResolvedErrors resolved =
      resolve_errors(params, values, clamp_digits(est, limits), 1e-3, limits, cache);

  Theorem3Fit fit;
  fit.normalized.formula = "|v^(n) at m - S| * m^(2n+1+2q/p)";
  fit.normalized.oracle_digits = resolved.ref->guaranteed_digits;
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    CheckPoint point;
    point.index = m_list[i];
    point.err_hi = resolved.errors[i].hi.to_double();
    point.indeterminate = resolved.indeterminate[i];
    if (!point.indeterminate) {
      const double scale = exponent * std::log10(static_cast<double>(m_list[i]));
      point.lo = std::pow(10.0, approx_log10(resolved.errors[i].lo) + scale);
      point.hi = std::pow(10.0, approx_log10(resolved.errors[i].hi) + scale);
      point.value = (point.lo + point.hi) / 2;
    }
    fit.normalized.points.push_back(point);
  }

  std::vector<double> tail;
  const std::size_t start = fit.normalized.points.size() -
                            std::max<std::size_t>(1, fit.normalized.points.size() / 3);
  for (std::size_t i = start; i < fit.normalized.points.size(); ++i) {
    if (!fit.normalized.points[i].indeterminate) tail.push_back(fit.normalized.points[i].value);
  }
  if (!tail.empty()) {
    double sum = 0;
    for (const double v : tail) sum += v;
    fit.omega_estimate = sum / static_cast<double>(tail.size());
    const auto [lo_it, hi_it] = std::minmax_element(tail.begin(), tail.end());
    fit.tail_relative_spread =
        fit.omega_estimate == 0 ? 0.0 : (*hi_it - *lo_it) / fit.omega_estimate;
    fit.plateau = fit.tail_relative_spread < 0.10;
  }
  fit.normalized.target = fit.omega_estimate;
  return fit;
}

TrendReport theorem4_check(SeriesParams params, std::int64_t m,
                           std::span<const std::int64_t> n_list, const Limits& limits,
                           OracleCache* cache) {
  if (m < 0 || m > 6) {
    throw std::invalid_argument("theorem4_check: m must lie in [0, 6]");
  }
  check_increasing(n_list, std::max<std::int64_t>(m + 2, 1), "theorem4_check");

  // u-direction: reduite order m fixed, partial-sum order varies.
  std::vector<Rational> u_values;
  u_values.reserve(n_list.size());
  PartialSumStream sums(params);
  for (const std::int64_t n : n_list) {
    const Rational& s = sums.advance_to(n, limits);
    const Rational rho = reduite(params, n, m, limits);
    u_values.push_back(n % 2 == 0 ? s - rho : s + rho);
  }

  // v-direction: partial-sum order m fixed, reduite order varies.
  std::vector<Rational> v_values;
  v_values.reserve(n_list.size());
  const Rational s_fixed = partial_sum(params, m, limits);
  ConvergentStream stream(params, m);
  for (const std::int64_t n : n_list) {
    if (n > limits.max_reduite_order) {
      throw ResourceLimitError("theorem4_check: reduite order exceeds the configured maximum");
    }
    stream.advance_to(n);
    const Rational rho = stream.reduite();
    v_values.push_back(m % 2 == 0 ? s_fixed - rho : s_fixed + rho);
  }

  const double q_over_p = static_cast<double>(params.q) / static_cast<double>(params.p);
  const double est = std::max((2.0 * static_cast<double>(m) + 3.0) *
                                  std::log10(2.0 * static_cast<double>(n_list.back())),
                              (2.0 * static_cast<double>(m) + 1.0 + 2.0 * q_over_p) *
                                  std::log10(static_cast<double>(n_list.back()))) + 12;

  std::int64_t digits = clamp_digits(est, limits);
  std::shared_ptr<const ReferenceSum> ref;
  std::vector<ErrorInterval> u_err, v_err;
  std::vector<bool> indeterminate;
  for (;;) {
    ref = get_reference(params, digits, limits, cache);
    u_err.clear();
    v_err.clear();
    indeterminate.assign(n_list.size(), false);
    bool all_ok = true;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
      u_err.push_back(certified_error(u_values[i], *ref));
      v_err.push_back(certified_error(v_values[i], *ref));
      const bool bad = u_err.back().lo.is_zero() || v_err.back().lo.is_zero() ||
                       u_err.back().relative_width() >= 1e-3 ||
                       v_err.back().relative_width() >= 1e-3;
      if (bad) {
        indeterminate[i] = true;
        all_ok = false;
      }
    }
    if (all_ok || digits >= limits.max_oracle_digits) break;
    digits = std::min(digits * 2, limits.max_oracle_digits);
  }

  TrendReport report;
  report.oracle_digits = ref->guaranteed_digits;
  report.predicted_slope = 2.0 * (q_over_p - 1.0);
  std::vector<std::pair<double, double>> xy;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    TrendPoint point;
    point.index = n_list[i];
    point.indeterminate = indeterminate[i];
    if (!indeterminate[i]) {
      point.u_err = std::pow(10.0, mid_log10(u_err[i]));
      point.v_err = std::pow(10.0, mid_log10(v_err[i]));
      point.log10_ratio = mid_log10(u_err[i]) - mid_log10(v_err[i]);
      point.ratio = std::pow(10.0, point.log10_ratio);
      xy.emplace_back(std::log10(static_cast<double>(n_list[i])), point.log10_ratio);
    }
    report.points.push_back(point);
  }
  report.slope = fit_slope(xy);
  if (report.slope < -0.15) {
    report.classification = TrendClass::ratio_to_zero;
  } else if (report.slope > 0.15) {
    report.classification = TrendClass::ratio_diverges;
  } else {
    report.classification = TrendClass::ratio_bounded;
  }
  return report;
}

ChiEstimate chi_estimate(SeriesParams params, std::int64_t n, const Limits& limits,
                         OracleCache* cache, double rel_width_target) {
  if (n < 1) throw std::invalid_argument("chi_estimate: n must be >= 1");

  const std::vector<Rational> values = w_sequence(params, {n, n + 1}, limits);
  const double est = 1.54 * static_cast<double>(n + 1) + 16;
  const ResolvedErrors resolved = resolve_errors(params, values, clamp_digits(est, limits),
                                                 rel_width_target, limits, cache);
  if (!resolved.all_resolved) {
    throw ResourceLimitError(
        "chi_estimate: oracle digits guard too low to certify the requested ratio");
  }

  const Rational ratio_lo = resolved.errors[1].lo / resolved.errors[0].hi;
  const Rational ratio_hi = resolved.errors[1].hi / resolved.errors[0].lo;

  ChiEstimate out;
  out.oracle_digits = resolved.ref->guaranteed_digits;
  out.log10_lo = approx_log10(ratio_lo) - kLog10Cushion;
  out.log10_hi = approx_log10(ratio_hi) + kLog10Cushion;
  out.log10_ratio = (out.log10_lo + out.log10_hi) / 2;
  out.error_bars = (out.log10_hi - out.log10_lo) / 2;
  out.chi = std::pow(10.0, out.log10_ratio);
  out.chi_lo = std::pow(10.0, out.log10_lo);
  out.chi_hi = std::pow(10.0, out.log10_hi);
  return out;
}

Theorem6Report theorem6_check(SeriesParams params, const ExtractorSpec& zeta,
                              std::span<const std::int64_t> n_list, const Limits& limits,
                              OracleCache* cache) {
  check_increasing(n_list, 1, "theorem6_check");

  const std::vector<Rational> values = w_zeta_values(params, zeta, n_list, limits);

  const double last = static_cast<double>(n_list.back());
  const double zeta_last = static_cast<double>(zeta.evaluate(n_list.back()));
  const double est =
      kLog10_4e2 * last + (2 * last + 3) * std::max(0.0, std::log10(zeta_last / last)) + 16;
  const ResolvedErrors resolved =
      resolve_errors(params, values, clamp_digits(est, limits), 1e-3, limits, cache);

  Theorem6Report report;
  report.superlinear_hypothesis = zeta.superlinear();
  report.normalized.formula = "|w_zeta^(n) - S| / ((pi/4p) (1/4e^2)^n (n/zeta(n))^(2n+3))";
  report.normalized.oracle_digits = resolved.ref->guaranteed_digits;

  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const double n = static_cast<double>(n_list[i]);
    const double zn = static_cast<double>(zeta.evaluate(n_list[i]));
    const double log_equiv = std::log10(std::numbers::pi / (4.0 * static_cast<double>(params.p))) -
                             n * kLog10_4e2 + (2 * n + 3) * (std::log10(n) - std::log10(zn));
    CheckPoint point;
    point.index = n_list[i];
    point.err_hi = resolved.errors[i].hi.to_double();
    point.indeterminate = resolved.indeterminate[i];
    if (!point.indeterminate) {
      point.lo = std::pow(10.0, approx_log10(resolved.errors[i].lo) - log_equiv);
      point.hi = std::pow(10.0, approx_log10(resolved.errors[i].hi) - log_equiv);
      point.value = (point.lo + point.hi) / 2;
    }
    report.normalized.points.push_back(point);
  }

  // Consecutive error ratios, with the strict-decrease decision taken on the
  // exact interval endpoints.
  bool all_decreasing = true;
  bool have_prev = false;
  Rational prev_lo;
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    RatePoint point;
    point.index = n_list[i];
    point.indeterminate = resolved.indeterminate[i] || resolved.indeterminate[i - 1];
    point.err_hi = resolved.errors[i].hi.to_double();
    if (point.indeterminate) {
      all_decreasing = false;
      report.ratios.push_back(point);
      continue;
    }
    const Rational ratio_lo = resolved.errors[i].lo / resolved.errors[i - 1].hi;
    const Rational ratio_hi = resolved.errors[i].hi / resolved.errors[i - 1].lo;
    point.log10_lo = approx_log10(ratio_lo) - kLog10Cushion;
    point.log10_hi = approx_log10(ratio_hi) + kLog10Cushion;
    point.log10_ratio = (point.log10_lo + point.log10_hi) / 2;
    point.ratio = std::pow(10.0, point.log10_ratio);
    if (have_prev && !(ratio_hi < prev_lo)) all_decreasing = false;
    prev_lo = ratio_lo;
    have_prev = true;
    report.ratios.push_back(point);
  }
  report.ratios_strictly_decreasing = all_decreasing && report.ratios.size() >= 2;
  return report;
}

BudgetScan budget_scan(SeriesParams params, std::int64_t total_order, const Limits& limits,
                       OracleCache* cache, int threads) {
  if (total_order < 2 || total_order % 2 != 0) {
    throw std::invalid_argument("budget_scan: total order must be a positive even integer");
  }
  if (total_order > limits.max_reduite_order || total_order > limits.max_sum_order) {
    throw ResourceLimitError("budget_scan: total order exceeds the configured maximum");
  }

  const std::int64_t digits =
      std::min<std::int64_t>(static_cast<std::int64_t>(
                                 std::ceil(2.5 * static_cast<double>(total_order))),
                             limits.max_oracle_digits);
  const auto ref = get_reference(params, digits, limits, cache);

  std::vector<Rational> sums;
  sums.reserve(static_cast<std::size_t>(total_order) + 1);
  PartialSumStream stream(params);
  for (std::int64_t n = 0; n <= total_order; ++n) sums.push_back(stream.advance_to(n, limits));

  BudgetScan scan;
  scan.oracle_digits = ref->guaranteed_digits;
  scan.profile.assign(static_cast<std::size_t>(total_order), ScanPoint{});
  parallel_for_index(total_order, threads, [&](std::int64_t i) {
    const std::int64_t n = i + 1;
    const std::int64_t m = total_order - n;
    const Rational rho = reduite(params, n, m, limits);
    const Rational value = n % 2 == 0 ? sums[static_cast<std::size_t>(n)] - rho
                                      : sums[static_cast<std::size_t>(n)] + rho;
    scan.profile[static_cast<std::size_t>(i)] = {n, m, digits_correct(value, *ref)};
  });

  std::int64_t best = -1;
  for (const ScanPoint& point : scan.profile) {
    if (point.digits && *point.digits > best) best = *point.digits;
  }
  for (const ScanPoint& point : scan.profile) {
    if (point.digits && *point.digits == best) scan.argmax.push_back(point.n);
  }
  return scan;
}

ExtractionComparison semi_vs_full_extraction(SeriesParams params, const ExtractorSpec& zeta,
                                             std::int64_t n, std::int64_t k,
                                             const Limits& limits, OracleCache* cache) {
  ExtractionComparison out;
  out.n = n;
  out.k = k;
  out.zeta_of_k = zeta.evaluate(k);

  const Rational semi = w_zeta_value(params, zeta, n, limits);
  const Rational full = w_value(params, out.zeta_of_k, limits);

  const double zn = static_cast<double>(zeta.evaluate(n));
  const double est = std::max(
      kLog10_4e2 * static_cast<double>(n) +
          (2.0 * static_cast<double>(n) + 3) *
              std::max(0.0, std::log10(zn / std::max(1.0, static_cast<double>(n)))),
      1.54 * static_cast<double>(out.zeta_of_k)) + 20;

  std::int64_t digits = clamp_digits(est, limits);
  for (;;) {
    const auto ref = get_reference(params, digits, limits, cache);
    out.oracle_digits = ref->guaranteed_digits;
    out.digits_semi = digits_correct(semi, *ref);
    out.digits_full = digits_correct(full, *ref);
    if ((out.digits_semi && out.digits_full) || digits >= limits.max_oracle_digits) return out;
    digits = std::min(digits * 2, limits.max_oracle_digits);
  }
}

}  // namespace cha
