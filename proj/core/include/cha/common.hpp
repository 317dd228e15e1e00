// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cha {

// Thrown when a computation would exceed a configured resource ceiling
// (reduite order, partial-sum order, oracle digits, rendered decimals).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource ceilings. Integer sizes themselves are unbounded; these guards
// stop runaway orders before they allocate multi-gigabyte operands.
struct Limits {
  std::int64_t max_reduite_order = 100'000;
  std::int64_t max_sum_order = 1'000'000;
  std::int64_t max_oracle_digits = 5'000;
  std::int64_t max_decimals = 100'000;
};

const Limits& default_limits();

// Inclusive index range [first, last].
struct IndexRange {
  std::int64_t first = 0;
  std::int64_t last = 0;

  std::int64_t count() const { return last - first + 1; }
  bool empty() const { return last < first; }
};

inline void require_nonempty(const IndexRange& range, const char* what) {
  if (range.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty index range");
  }
}

}  // namespace cha
