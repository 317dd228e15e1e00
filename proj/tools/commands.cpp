// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cha/analysis.hpp"
#include "cha/contfrac.hpp"
#include "cha/decimal.hpp"
#include "cha/oracle.hpp"
#include "table_fixtures.hpp"

namespace cha::cli {

namespace {

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

std::string fmt_error(double value) { return fmt("%.6e", value); }
std::string fmt_value(double value) { return fmt("%.9g", value); }
std::string fmt_log(double value) { return fmt("%.9f", value); }

int finalize(const CommonOptions& options, OutputRecord& record, const Stopwatch& watch) {
  if (!options.no_timing) record.timing_ms = watch.elapsed_ms();
  emit_to_destination(record, options.format, options.out_path);
  return kExitOk;
}

std::string render_decimal(const CommonOptions& options, const Rational& x) {
  return to_decimal(x, options.decimals, RoundingMode::round_half_even, options.limits)
      .to_string();
}

void append_value_cells(const CommonOptions& options, std::vector<std::string>& cells,
                        const Rational& x) {
  cells.push_back(render_decimal(options, x));
  if (options.exact) cells.push_back(x.to_fraction_string());
}

std::vector<std::string> value_columns(const CommonOptions& options,
                                       std::vector<std::string> head) {
  head.push_back("value");
  if (options.exact) head.push_back("exact");
  return head;
}

// --- file-backed reference cache -------------------------------------------

std::string reference_path(const std::string& dir, SeriesParams params, std::int64_t digits) {
  return dir + "/ref_p" + std::to_string(params.p) + "_q" + std::to_string(params.q) + "_d" +
         std::to_string(digits) + ".txt";
}

std::optional<ReferenceSum> load_reference(const std::string& dir, SeriesParams params,
                                           std::int64_t digits) {
  std::ifstream in(reference_path(dir, params, digits));
  if (!in) return std::nullopt;
  std::string magic;
  int version = 0;
  std::int64_t p = 0, q = 0, file_digits = 0, order = 0, guaranteed = 0;
  std::string key, lo_text, hi_text;
  in >> magic >> version;
  in >> key >> p >> key >> q >> key >> file_digits >> key >> order >> key >> guaranteed;
  in >> key >> lo_text >> key >> hi_text;
  if (!in || magic != "cha-reference-cache" || version != 1 || p != params.p ||
      q != params.q || file_digits != digits) {
    return std::nullopt;
  }
  try {
    ReferenceSum ref{params,
                     Enclosure{Rational::from_fraction_string(lo_text),
                               Rational::from_fraction_string(hi_text), EnclosureTarget::sum},
                     guaranteed, order};
    // distrust stale files: the width must actually deliver the digits
    if (ref.enclosure.hi < ref.enclosure.lo) return std::nullopt;
    if (ref.enclosure.width() >= Rational(BigInt(1), pow10(digits))) return std::nullopt;
    return ref;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_reference(const std::string& dir, std::int64_t digits, const ReferenceSum& ref) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(reference_path(dir, ref.params, digits));
  if (!out) return;  // cache is best-effort; the computed value is still returned
  out << "cha-reference-cache 1\n";
  out << "p " << ref.params.p << "\n";
  out << "q " << ref.params.q << "\n";
  out << "digits " << digits << "\n";
  out << "order " << ref.order_used << "\n";
  out << "guaranteed " << ref.guaranteed_digits << "\n";
  out << "lo " << ref.enclosure.lo.to_fraction_string() << "\n";
  out << "hi " << ref.enclosure.hi.to_fraction_string() << "\n";
}

ReferenceSum obtain_reference(const CommonOptions& options, std::int64_t digits) {
  if (!options.cache_dir.empty()) {
    if (auto cached = load_reference(options.cache_dir, options.params(), digits)) {
      return *cached;
    }
  }
  ReferenceSum ref = reference_sum(options.params(), digits, options.limits);
  if (!options.cache_dir.empty()) store_reference(options.cache_dir, digits, ref);
  return ref;
}

void require_heavy(const CommonOptions& options, std::int64_t digits_needed,
                   const std::string& what) {
  if (digits_needed > kHeavyDigitsThreshold && !options.heavy) {
    throw ResourceLimitError(what + " needs an oracle of ~" + std::to_string(digits_needed) +
                             " digits; pass --heavy to allow it");
  }
}

}  // namespace

IndexRange RangeSpec::resolve(std::int64_t default_first, std::int64_t default_last) const {
  if (single) {
    if (first || last) {
      throw std::invalid_argument("give either a single index or a range, not both");
    }
    return {*single, *single};
  }
  const IndexRange range{first.value_or(default_first), last.value_or(default_last)};
  require_nonempty(range, "index range");
  return range;
}

std::vector<std::int64_t> RangeSpec::resolve_list(std::int64_t default_first,
                                                  std::int64_t default_last) const {
  if (step < 1) throw std::invalid_argument("step must be >= 1");
  const IndexRange range = resolve(default_first, default_last);
  std::vector<std::int64_t> out;
  for (std::int64_t v = range.first; v <= range.last; v += step) out.push_back(v);
  return out;
}

int run_sum(const CommonOptions& options, const RangeSpec& n_spec) {
  const Stopwatch watch;
  const IndexRange range = n_spec.resolve(0, 10);

  OutputRecord record;
  record.command = "sum";
  record.p = options.p;
  record.q = options.q;
  record.columns = value_columns(options, {"n"});

  PartialSumStream stream(options.params());
  for (std::int64_t n = range.first; n <= range.last; ++n) {
    std::vector<std::string> cells{std::to_string(n)};
    append_value_cells(options, cells, stream.advance_to(n, options.limits));
    record.add_row(std::move(cells));
  }
  return finalize(options, record, watch);
}

int run_reduite(const CommonOptions& options, std::int64_t n, const RangeSpec& m_spec) {
  const Stopwatch watch;
  const IndexRange range = m_spec.resolve(0, 10);
  if (range.first < 0) throw std::invalid_argument("reduite: m must be nonnegative");
  if (range.last > options.limits.max_reduite_order) {
    throw ResourceLimitError("reduite: order exceeds the configured maximum");
  }

  OutputRecord record;
  record.command = "reduite";
  record.p = options.p;
  record.q = options.q;
  record.columns = value_columns(options, {"n", "m"});

  ConvergentStream stream(options.params(), n);
  stream.advance_to(range.first);
  for (std::int64_t m = range.first; m <= range.last; ++m) {
    std::vector<std::string> cells{std::to_string(n), std::to_string(m)};
    append_value_cells(options, cells, stream.reduite());
    record.add_row(std::move(cells));
    if (m < range.last) stream.advance();
  }
  return finalize(options, record, watch);
}

int run_accel(const CommonOptions& options, const std::string& kind,
              std::optional<std::int64_t> fixed_m, std::optional<std::int64_t> fixed_n,
              const RangeSpec& index_spec, const std::string& zeta_name) {
  const Stopwatch watch;

  OutputRecord record;
  record.command = "accel";
  record.p = options.p;
  record.q = options.q;
  record.columns = value_columns(options, {"kind", "m", "n"});

  const SeriesParams params = options.params();
  auto add = [&](std::int64_t m, std::int64_t n, const Rational& x) {
    std::vector<std::string> cells{kind, std::to_string(m), std::to_string(n)};
    append_value_cells(options, cells, x);
    record.add_row(std::move(cells));
  };

  if (kind == "u") {
    if (!fixed_m) throw std::invalid_argument("accel --kind u needs --m");
    const IndexRange range = index_spec.resolve(0, 10);
    const auto values = u_sequence(params, *fixed_m, range, options.limits);
    for (std::size_t i = 0; i < values.size(); ++i) {
      add(*fixed_m, range.first + static_cast<std::int64_t>(i), values[i]);
    }
  } else if (kind == "v") {
    if (!fixed_n) throw std::invalid_argument("accel --kind v needs --n");
    const IndexRange range = index_spec.resolve(0, 10);
    const auto values = v_sequence(params, *fixed_n, range, options.limits);
    for (std::size_t i = 0; i < values.size(); ++i) {
      add(range.first + static_cast<std::int64_t>(i), *fixed_n, values[i]);
    }
  } else if (kind == "w") {
    IndexRange range{0, 10};
    if (fixed_n && !index_spec.single && !index_spec.first && !index_spec.last) {
      range = {*fixed_n, *fixed_n};
    } else {
      range = index_spec.resolve(0, 10);
    }
    const auto values = w_sequence(params, range, options.limits);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::int64_t n = range.first + static_cast<std::int64_t>(i);
      add(n, n, values[i]);
    }
  } else if (kind == "wzeta") {
    const ExtractorSpec zeta = ExtractorSpec::parse(zeta_name);
    IndexRange range{0, 10};
    if (fixed_n && !index_spec.single && !index_spec.first && !index_spec.last) {
      range = {*fixed_n, *fixed_n};
    } else {
      range = index_spec.resolve(0, 10);
    }
    for (std::int64_t k = range.first; k <= range.last; ++k) {
      add(k, zeta.evaluate(k), w_zeta_value(params, zeta, k, options.limits));
    }
  } else {
    throw std::invalid_argument("accel: unknown --kind '" + kind +
                                "' (expected u, v, w or wzeta)");
  }
  return finalize(options, record, watch);
}

int run_oracle(const CommonOptions& options, std::int64_t digits) {
  const Stopwatch watch;
  require_heavy(options, digits, "oracle --digits " + std::to_string(digits));

  const ReferenceSum ref = obtain_reference(options, digits);

  OutputRecord record;
  record.command = "oracle";
  record.p = options.p;
  record.q = options.q;
  record.oracle_digits = ref.guaranteed_digits;
  record.columns = {"digits", "order", "lo", "hi", "value"};
  record.add_row({std::to_string(ref.guaranteed_digits), std::to_string(ref.order_used),
                  ref.enclosure.lo.to_fraction_string(), ref.enclosure.hi.to_fraction_string(),
                  render_decimal(options, ref.enclosure.midpoint())});
  return finalize(options, record, watch);
}

int run_rates(const CommonOptions& options, int theorem, std::optional<std::int64_t> order,
              const RangeSpec& n_spec, const RangeSpec& m_spec, const std::string& zeta_name) {
  const Stopwatch watch;
  const SeriesParams params = options.params();

  OutputRecord record;
  record.command = "rates";
  record.p = options.p;
  record.q = options.q;
  record.summary.emplace_back("theorem", std::to_string(theorem));

  auto normalized_cells = [&](const EquivalentCheck& check, const char* index_name) {
    record.columns = {index_name, "error", "normalized", "normalized_lo", "normalized_hi"};
    record.oracle_digits = check.oracle_digits;
    for (const auto& point : check.points) {
      if (point.indeterminate) {
        record.add_row({std::to_string(point.index), fmt_error(point.err_hi), "indeterminate",
                        "", ""});
      } else {
        record.add_row({std::to_string(point.index), fmt_error(point.err_hi),
                        fmt_value(point.value), fmt_value(point.lo), fmt_value(point.hi)});
      }
    }
  };

  switch (theorem) {
    case 1: {
      const auto n_list = n_spec.resolve_list(100, 1000);
      normalized_cells(theorem1_check(params, n_list, options.limits), "n");
      record.summary.emplace_back("formula", "2*p*n*|S^(n) - S|");
      break;
    }
    case 2: {
      const std::int64_t m = order.value_or(1);
      const auto n_list = n_spec.resolve_list(50, 500);
      normalized_cells(theorem2_check(params, m, n_list, options.limits), "n");
      record.summary.emplace_back("m", std::to_string(m));
      record.summary.emplace_back("formula", "|u_m^(n) - S| * (2n)^(2m+3) * p / (m+1)!^2");
      break;
    }
    case 3: {
      const std::int64_t n = order.value_or(0);
      const auto m_list = m_spec.resolve_list(10, 400);
      const Theorem3Fit fit = theorem3_fit(params, n, m_list, options.limits);
      normalized_cells(fit.normalized, "m");
      record.summary.emplace_back("n", std::to_string(n));
      record.summary.emplace_back("omega_estimate", fmt_value(fit.omega_estimate));
      record.summary.emplace_back("tail_relative_spread", fmt_value(fit.tail_relative_spread));
      record.summary.emplace_back("plateau", fit.plateau ? "true" : "false");
      break;
    }
    case 4: {
      const std::int64_t m = order.value_or(1);
      const auto n_list = n_spec.resolve_list(20, 300);
      const TrendReport report = theorem4_check(params, m, n_list, options.limits);
      record.oracle_digits = report.oracle_digits;
      record.columns = {"n", "u_error", "v_error", "ratio", "log10_ratio"};
      for (const auto& point : report.points) {
        if (point.indeterminate) {
          record.add_row({std::to_string(point.index), "indeterminate", "indeterminate", "", ""});
        } else {
          record.add_row({std::to_string(point.index), fmt_error(point.u_err),
                          fmt_error(point.v_err), fmt_value(point.ratio),
                          fmt_log(point.log10_ratio)});
        }
      }
      record.summary.emplace_back("m", std::to_string(m));
      record.summary.emplace_back("slope", fmt_value(report.slope));
      record.summary.emplace_back("predicted_slope", fmt_value(report.predicted_slope));
      const char* trend = report.classification == TrendClass::ratio_to_zero ? "ratio_to_zero"
                          : report.classification == TrendClass::ratio_diverges
                              ? "ratio_diverges"
                              : "ratio_bounded";
      record.summary.emplace_back("classification", trend);
      break;
    }
    case 6: {
      const ExtractorSpec zeta = ExtractorSpec::parse(zeta_name);
      const auto n_list = n_spec.resolve_list(4, 12);
      const Theorem6Report report = theorem6_check(params, zeta, n_list, options.limits);
      record.oracle_digits = report.normalized.oracle_digits;
      record.columns = {"n", "error", "normalized", "ratio"};
      for (std::size_t i = 0; i < report.normalized.points.size(); ++i) {
        const auto& point = report.normalized.points[i];
        std::string ratio_cell;
        if (i > 0) {
          const auto& ratio = report.ratios[i - 1];
          ratio_cell = ratio.indeterminate ? "indeterminate" : fmt_value(ratio.ratio);
        }
        record.add_row({std::to_string(point.index), fmt_error(point.err_hi),
                        point.indeterminate ? "indeterminate" : fmt_value(point.value),
                        ratio_cell});
      }
      record.summary.emplace_back("zeta", zeta.name());
      record.summary.emplace_back("superlinear_hypothesis",
                                  report.superlinear_hypothesis ? "true" : "false");
      record.summary.emplace_back("ratios_strictly_decreasing",
                                  report.ratios_strictly_decreasing ? "true" : "false");
      break;
    }
    default:
      throw std::invalid_argument("rates: --theorem must be one of 1, 2, 3, 4, 6");
  }
  return finalize(options, record, watch);
}

int run_chi(const CommonOptions& options, std::int64_t n) {
  const Stopwatch watch;
  const auto digits_needed = static_cast<std::int64_t>(1.54 * static_cast<double>(n + 1)) + 16;
  require_heavy(options, digits_needed, "chi --n " + std::to_string(n));

  const ChiEstimate est = chi_estimate(options.params(), n, options.limits);

  OutputRecord record;
  record.command = "chi";
  record.p = options.p;
  record.q = options.q;
  record.oracle_digits = est.oracle_digits;
  record.columns = {"n", "log10_ratio", "bars", "chi"};
  record.add_row({std::to_string(n), fmt_log(est.log10_ratio), fmt("%.3e", est.error_bars),
                  fmt("%.10f", est.chi)});
  return finalize(options, record, watch);
}

int run_aitken(const CommonOptions& options, const RangeSpec& n_spec) {
  const Stopwatch watch;
  const IndexRange range = n_spec.resolve(2, 20);

  OutputRecord record;
  record.command = "aitken";
  record.p = options.p;
  record.q = options.q;
  record.columns = value_columns(options, {"n"});
  record.columns.push_back("matches_u");

  const SeriesParams params = options.params();
  const auto values = aitken_sequence(params, range, options.limits);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t n = range.first + static_cast<std::int64_t>(i);
    std::vector<std::string> cells{std::to_string(n)};
    append_value_cells(options, cells, values[i]);
    const bool matches = values[i] == accel_value(params, 0, n - 1, options.limits);
    cells.push_back(matches ? "true" : "false");
    record.add_row(std::move(cells));
  }
  return finalize(options, record, watch);
}

int run_scan(const CommonOptions& options, std::int64_t total_order) {
  const Stopwatch watch;
  const BudgetScan scan = budget_scan(options.params(), total_order, options.limits,
                                      &OracleCache::global(), options.threads);

  OutputRecord record;
  record.command = "scan";
  record.p = options.p;
  record.q = options.q;
  record.oracle_digits = scan.oracle_digits;
  record.columns = {"n", "m", "digits", "is_argmax"};
  for (const auto& point : scan.profile) {
    const bool is_max =
        point.digits &&
        std::find(scan.argmax.begin(), scan.argmax.end(), point.n) != scan.argmax.end();
    record.add_row({std::to_string(point.n), std::to_string(point.m),
                    point.digits ? std::to_string(*point.digits) : "indeterminate",
                    is_max ? "true" : "false"});
  }
  std::string argmax_text;
  for (const std::int64_t n : scan.argmax) {
    if (!argmax_text.empty()) argmax_text += ' ';
    argmax_text += std::to_string(n);
  }
  record.summary.emplace_back("argmax", argmax_text);
  return finalize(options, record, watch);
}

int run_table(const CommonOptions& options, int id) {
  const Stopwatch watch;
  const TableCheckResult result = check_table(id, options.limits);

  OutputRecord record;
  record.command = "table";
  record.columns = {"p", "q", "n", "m", "expected", "computed", "diff", "tolerance", "ok"};
  record.summary.emplace_back("table", std::to_string(id));
  record.summary.emplace_back("description", table_description(id));
  for (const CellResult& cell : result.cells) {
    record.add_row({std::to_string(cell.cell.p), std::to_string(cell.cell.q),
                    std::to_string(cell.cell.n),
                    cell.cell.m >= 0 ? std::to_string(cell.cell.m) : "",
                    cell.cell.display, cell.computed, cell.diff, cell.tolerance,
                    cell.ok ? "true" : "false"});
    if (!cell.ok) {
      std::cerr << "table " << id << " mismatch at p=" << cell.cell.p << " q=" << cell.cell.q
                << " n=" << cell.cell.n;
      if (cell.cell.m >= 0) std::cerr << " m=" << cell.cell.m;
      std::cerr << ": expected " << cell.cell.display << " computed " << cell.computed
                << " |diff| " << cell.diff << " > tolerance " << cell.tolerance << "\n";
    }
  }
  record.summary.emplace_back("all_ok", result.all_ok ? "true" : "false");
  finalize(options, record, watch);
  return result.all_ok ? kExitOk : kExitMismatch;
}

}  // namespace cha::cli
