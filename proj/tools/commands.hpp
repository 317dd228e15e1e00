// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cha/accel.hpp"
#include "cha/common.hpp"
#include "cha/series.hpp"
#include "output.hpp"

namespace cha::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitResource = 3;

// Heavy runs (oracle targets beyond this many digits) need an explicit
// opt-in so the default test suite stays fast.
inline constexpr std::int64_t kHeavyDigitsThreshold = 1500;

struct CommonOptions {
  std::int64_t p = 2;
  std::int64_t q = 1;
  std::int64_t decimals = 15;
  Format format = Format::csv;
  bool exact = false;
  std::string out_path;
  int threads = 1;
  bool no_timing = false;
  bool heavy = false;
  std::string cache_dir;
  Limits limits;

  SeriesParams params() const { return SeriesParams{p, q}; }
};

// An index selection: a single value, or an inclusive range with a step.
struct RangeSpec {
  std::optional<std::int64_t> single;
  std::optional<std::int64_t> first;
  std::optional<std::int64_t> last;
  std::int64_t step = 1;

  IndexRange resolve(std::int64_t default_first, std::int64_t default_last) const;
  std::vector<std::int64_t> resolve_list(std::int64_t default_first,
                                         std::int64_t default_last) const;
};

int run_sum(const CommonOptions& options, const RangeSpec& n_spec);
int run_reduite(const CommonOptions& options, std::int64_t n, const RangeSpec& m_spec);
int run_accel(const CommonOptions& options, const std::string& kind,
              std::optional<std::int64_t> fixed_m, std::optional<std::int64_t> fixed_n,
              const RangeSpec& index_spec, const std::string& zeta_name);
int run_oracle(const CommonOptions& options, std::int64_t digits);
int run_rates(const CommonOptions& options, int theorem, std::optional<std::int64_t> order,
              const RangeSpec& n_spec, const RangeSpec& m_spec, const std::string& zeta_name);
int run_chi(const CommonOptions& options, std::int64_t n);
int run_aitken(const CommonOptions& options, const RangeSpec& n_spec);
int run_scan(const CommonOptions& options, std::int64_t total_order);
int run_table(const CommonOptions& options, int id);

}  // namespace cha::cli
