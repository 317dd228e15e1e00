// SPDX-License-Identifier: Apache-2.0
#include "table_fixtures.hpp"

#include <stdexcept>

#include "cha/accel.hpp"
#include "cha/decimal.hpp"
#include "cha/integer.hpp"
#include "cha/rational.hpp"
#include "cha/series.hpp"

namespace cha::cli {

namespace {

// Partial sums at three orders for two parameter pairs.
const std::vector<TableCell> kTable1{
    {2, 1, 100, -1, "0.787873"},    {2, 1, 1000, -1, "0.785647"},
    {2, 1, 10000, -1, "0.78542316"}, {1, 2, 100, -1, "0.311730"},
    {1, 2, 1000, -1, "0.307351"},   {1, 2, 10000, -1, "0.30690280"},
};

// Accelerated values for (2,1) over the (n, m) grid [0,4]^2.
const std::vector<TableCell> kTable2{
    {2, 1, 0, 0, "0.75000"},  {2, 1, 0, 1, "0.8000000"}, {2, 1, 0, 2, "0.77777778"},
    {2, 1, 0, 3, "0.790123457"}, {2, 1, 0, 4, "0.782222222"},
    {2, 1, 1, 0, "0.79167"},  {2, 1, 1, 1, "0.7843137"}, {2, 1, 1, 2, "0.78571429"},
    {2, 1, 1, 3, "0.785276074"}, {2, 1, 1, 4, "0.785454545"},
    {2, 1, 2, 0, "0.78333"},  {2, 1, 2, 1, "0.7855856"}, {2, 1, 2, 2, "0.78536585"},
    {2, 1, 2, 3, "0.785406302"}, {2, 1, 2, 4, "0.785395537"},
    {2, 1, 3, 0, "0.78631"},  {2, 1, 3, 1, "0.7853480"}, {2, 1, 3, 2, "0.78540373"},
    {2, 1, 3, 3, "0.785397206"}, {2, 1, 3, 4, "0.785398385"},
    {2, 1, 4, 0, "0.78492"},  {2, 1, 4, 1, "0.7854157"}, {2, 1, 4, 2, "0.78539682"},
    {2, 1, 4, 3, "0.785398328"}, {2, 1, 4, 4, "0.785398135"},
};

// Diagonal accelerated values at small orders for three parameter pairs.
const std::vector<TableCell> kTable3{
    {1, 1, 0, -1, "0.66667"},  {1, 1, 3, -1, "0.693146417445"},
    {1, 1, 5, -1, "0.693147179886527"}, {1, 1, 7, -1, "0.693147180559356"},
    {10, 1, 0, -1, "0.91667"}, {10, 1, 3, -1, "0.938093859970"},
    {10, 1, 5, -1, "0.938094286672162"}, {10, 1, 7, -1, "0.938094287032576"},
    {1, 10, 0, -1, "0.05238"}, {1, 10, 3, -1, "0.052487740006"},
    {1, 10, 5, -1, "0.052487740074957"}, {1, 10, 7, -1, "0.052487740074975"},
};

std::int64_t displayed_decimals(const char* display) {
  const std::string text(display);
  const auto dot = text.find('.');
  return dot == std::string::npos ? 0 : static_cast<std::int64_t>(text.size() - dot - 1);
}

Rational cell_value(int id, const TableCell& cell, const Limits& limits) {
  const SeriesParams params{cell.p, cell.q};
  switch (id) {
    case 1: return partial_sum(params, cell.n, limits);
    case 2: return accel_value(params, cell.m, cell.n, limits);
    case 3: return w_value(params, cell.n, limits);
    default: throw std::invalid_argument("unknown table id " + std::to_string(id));
  }
}

}  // namespace

const std::vector<TableCell>& table_cells(int id) {
  switch (id) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    default: throw std::invalid_argument("unknown table id " + std::to_string(id));
  }
}

const char* table_description(int id) {
  switch (id) {
    case 1: return "partial sums at n = 100, 1000, 10000";
    case 2: return "accelerated values over the (n, m) grid [0,4]^2 for (2,1)";
    case 3: return "diagonal accelerated values at n = 0, 3, 5, 7";
    default: throw std::invalid_argument("unknown table id " + std::to_string(id));
  }
}

TableCheckResult check_table(int id, const Limits& limits) {
  TableCheckResult result;
  result.id = id;
  result.all_ok = true;
  for (const TableCell& cell : table_cells(id)) {
    const std::int64_t d = displayed_decimals(cell.display);
    const Rational expected = parse_decimal(cell.display);
    const Rational tolerance(BigInt(1), pow10(d));
    const Rational value = cell_value(id, cell, limits);
    const Rational diff = abs(value - expected);

    CellResult out;
    out.cell = cell;
    out.computed = to_decimal(value, d + 2).to_string();
    out.diff = to_scientific(diff, 3);
    out.tolerance = to_scientific(tolerance, 1);
    out.ok = diff <= tolerance;
    if (!out.ok) result.all_ok = false;
    result.cells.push_back(std::move(out));
  }
  return result;
}

}  // namespace cha::cli
