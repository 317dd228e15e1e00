// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using cha::cli::CommonOptions;
using cha::cli::RangeSpec;

void add_range_flags(CLI::App* cmd, RangeSpec& n_spec, RangeSpec& m_spec,
                     std::optional<std::int64_t>& n_single,
                     std::optional<std::int64_t>& m_single, bool with_step) {
  cmd->add_option("--n", n_single, "single partial-sum order");
  cmd->add_option("--n-first", n_spec.first, "first n of a range");
  cmd->add_option("--n-last", n_spec.last, "last n of a range (inclusive)");
  cmd->add_option("--m", m_single, "single reduite order");
  cmd->add_option("--m-first", m_spec.first, "first m of a range");
  cmd->add_option("--m-last", m_spec.last, "last m of a range (inclusive)");
  if (with_step) {
    cmd->add_option("--n-step", n_spec.step, "stride through the n range");
    cmd->add_option("--m-step", m_spec.step, "stride through the m range");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convergence acceleration for alternating series 1/(pk+q)"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions options;
  std::string format_name = "csv";
  std::optional<std::int64_t> max_m_override;
  std::optional<std::int64_t> max_digits_override;

  app.add_option("--p", options.p, "series step p >= 1")->capture_default_str();
  app.add_option("--q", options.q, "series offset q >= 1")->capture_default_str();
  app.add_option("--decimals", options.decimals, "decimal places in value columns")
      ->capture_default_str();
  app.add_option("--format", format_name, "output format: csv or json")->capture_default_str();
  app.add_flag("--exact", options.exact, "include exact fractions in the output");
  app.add_option("--out", options.out_path, "write data to this file instead of stdout");
  app.add_option("--max-m", max_m_override, "override the reduite-order guard");
  app.add_option("--max-digits", max_digits_override, "override the oracle digits guard");
  app.add_option("--threads", options.threads, "worker threads for scans")
      ->capture_default_str();
  app.add_flag("--no-timing", options.no_timing, "omit timing_ms from the output");
  app.add_flag("--heavy", options.heavy, "allow long runs (oracle beyond 1500 digits)");
  app.add_option("--cache-dir", options.cache_dir,
                 "directory for persisted reference enclosures");

  // sum
  auto* sum_cmd = app.add_subcommand("sum", "partial sums of the series");
  RangeSpec sum_n;
  sum_cmd->add_option("--n", sum_n.single, "single order");
  sum_cmd->add_option("--n-first", sum_n.first, "first order");
  sum_cmd->add_option("--n-last", sum_n.last, "last order (inclusive)");

  // reduite
  auto* reduite_cmd = app.add_subcommand("reduite", "convergents of the remainder fraction");
  std::int64_t reduite_n = 0;
  RangeSpec reduite_m;
  reduite_cmd->add_option("--n", reduite_n, "partial-sum order")->capture_default_str();
  reduite_cmd->add_option("--m", reduite_m.single, "single reduite order");
  reduite_cmd->add_option("--m-first", reduite_m.first, "first reduite order");
  reduite_cmd->add_option("--m-last", reduite_m.last, "last reduite order (inclusive)");

  // accel
  auto* accel_cmd = app.add_subcommand("accel", "accelerated sequences u, v, w, wzeta");
  std::string accel_kind;
  std::string accel_zeta = "square";
  std::optional<std::int64_t> accel_m, accel_n;
  RangeSpec accel_range;
  accel_cmd->add_option("--kind", accel_kind, "u, v, w or wzeta")->required();
  accel_cmd->add_option("--m", accel_m, "reduite order (fixed for u)");
  accel_cmd->add_option("--n", accel_n, "partial-sum order (fixed for v; single index for w)");
  accel_cmd->add_option("--n-first", accel_range.first, "first index of the range");
  accel_cmd->add_option("--n-last", accel_range.last, "last index of the range (inclusive)");
  accel_cmd->add_option("--m-first", accel_range.first, "first index (alias for v ranges)");
  accel_cmd->add_option("--m-last", accel_range.last, "last index (alias for v ranges)");
  accel_cmd->add_option("--zeta", accel_zeta, "extractor: identity|linearC|square|cube|powE|geomB")
      ->capture_default_str();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "certified reference enclosure of the sum");
  std::int64_t oracle_digits = 50;
  oracle_cmd->add_option("--digits", oracle_digits, "guaranteed correct decimals")
      ->capture_default_str();

  // rates
  auto* rates_cmd = app.add_subcommand("rates", "empirical rate checks of the theorems");
  int rates_theorem = 0;
  std::optional<std::int64_t> rates_order;
  RangeSpec rates_n, rates_m;
  std::optional<std::int64_t> rates_n_single, rates_m_single;
  std::string rates_zeta = "square";
  rates_cmd->add_option("--theorem", rates_theorem, "which statement to check: 1|2|3|4|6")
      ->required();
  add_range_flags(rates_cmd, rates_n, rates_m, rates_n_single, rates_m_single, true);
  rates_cmd->add_option("--order", rates_order,
                        "fixed order (m for theorems 2 and 4, n for theorem 3)");
  rates_cmd->add_option("--zeta", rates_zeta, "extractor for theorem 6")->capture_default_str();

  // chi
  auto* chi_cmd = app.add_subcommand("chi", "one-step log10 error ratio of the diagonal");
  std::int64_t chi_n = 200;
  chi_cmd->add_option("--n", chi_n, "diagonal order")->capture_default_str();

  // aitken
  auto* aitken_cmd = app.add_subcommand("aitken", "delta-squared of the partial sums");
  RangeSpec aitken_n;
  aitken_cmd->add_option("--n-first", aitken_n.first, "first order (>= 2)");
  aitken_cmd->add_option("--n-last", aitken_n.last, "last order (inclusive)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "correct decimals along a fixed budget m + n = N");
  std::int64_t scan_total = 0;
  scan_cmd->add_option("--N", scan_total, "total order budget (even)")->required();

  // table
  auto* table_cmd = app.add_subcommand("table", "recompute a published table and diff it");
  int table_id = 0;
  table_cmd->add_option("--id", table_id, "table number: 1, 2 or 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cha::cli::kExitOk : cha::cli::kExitUsage;
  }

  try {
    options.format = cha::cli::parse_format(format_name);
    if (max_m_override) options.limits.max_reduite_order = *max_m_override;
    if (max_digits_override) {
      options.limits.max_oracle_digits = *max_digits_override;
    } else if (const char* env = std::getenv("CHA_MAX_DIGITS")) {
      options.limits.max_oracle_digits = std::strtoll(env, nullptr, 10);
    }

    if (sum_cmd->parsed()) return cha::cli::run_sum(options, sum_n);
    if (reduite_cmd->parsed()) return cha::cli::run_reduite(options, reduite_n, reduite_m);
    if (accel_cmd->parsed()) {
      return cha::cli::run_accel(options, accel_kind, accel_m, accel_n, accel_range, accel_zeta);
    }
    if (oracle_cmd->parsed()) return cha::cli::run_oracle(options, oracle_digits);
    if (rates_cmd->parsed()) {
      if (rates_n_single) rates_n.single = rates_n_single;
      if (rates_m_single) rates_m.single = rates_m_single;
      if (!rates_order && rates_theorem == 3 && rates_n_single) {
        rates_order = rates_n_single;  // theorem 3 fixes n, scans m
        rates_n.single.reset();
      }
      if (!rates_order && (rates_theorem == 2 || rates_theorem == 4) && rates_m_single) {
        rates_order = rates_m_single;  // theorems 2 and 4 fix m, scan n
        rates_m.single.reset();
      }
      return cha::cli::run_rates(options, rates_theorem, rates_order, rates_n, rates_m,
                                 rates_zeta);
    }
    if (chi_cmd->parsed()) return cha::cli::run_chi(options, chi_n);
    if (aitken_cmd->parsed()) return cha::cli::run_aitken(options, aitken_n);
    if (scan_cmd->parsed()) return cha::cli::run_scan(options, scan_total);
    if (table_cmd->parsed()) return cha::cli::run_table(options, table_id);
    std::cerr << "no subcommand selected\n";
    return cha::cli::kExitUsage;
  } catch (const cha::ResourceLimitError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return cha::cli::kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cha::cli::kExitUsage;
  }
}
