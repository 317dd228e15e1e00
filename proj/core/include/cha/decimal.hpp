// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "cha/common.hpp"
#include "cha/rational.hpp"

namespace cha {

enum class RoundingMode {
  round_half_even,
  truncate,  // toward zero
};

// Fixed-point decimal rendering of a rational: value = sign * digits * 10^exponent.
// `digits` holds the decimal digits of the scaled magnitude, at least
// -exponent + 1 characters long so a "0.xxx" form can always be printed.
struct DecimalRendering {
  std::string digits;
  std::int64_t exponent = 0;
  RoundingMode mode = RoundingMode::round_half_even;
  bool negative = false;

  std::string to_string() const;
  Rational value() const;
};

// Renders x with d digits after the decimal point. Deterministic: the result
// depends only on (x, d, mode).
DecimalRendering to_decimal(const Rational& x, std::int64_t d,
                            RoundingMode mode = RoundingMode::round_half_even,
                            const Limits& limits = default_limits());

// Parses a plain decimal literal ("-0.250", "3", "19.5").
Rational parse_decimal(const std::string& text);

// Deterministic scientific rendering ("7.428377e-17") with `significant`
// digits of mantissa, round-half-even. Used for error columns whose
// magnitude makes fixed-point useless.
std::string to_scientific(const Rational& x, int significant);

}  // namespace cha
