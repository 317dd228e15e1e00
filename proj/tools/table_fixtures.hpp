// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cha/common.hpp"

namespace cha::cli {

// One published table entry: the displayed digits carry their own tolerance,
// 10^-d for d displayed decimals, which absorbs the unstated choice between
// truncation and rounding.
struct TableCell {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t m = -1;  // only the (n, m) grid table uses this
  const char* display = "";
};

struct CellResult {
  TableCell cell;
  std::string computed;
  std::string diff;
  std::string tolerance;
  bool ok = false;
};

struct TableCheckResult {
  int id = 0;
  std::vector<CellResult> cells;
  bool all_ok = false;
};

const std::vector<TableCell>& table_cells(int id);
const char* table_description(int id);

// Recomputes every cell of the table and compares against the displayed
// value at its tolerance.
TableCheckResult check_table(int id, const Limits& limits = default_limits());

}  // namespace cha::cli
