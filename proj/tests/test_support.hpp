// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "cha/decimal.hpp"
#include "cha/rational.hpp"
#include "cha/series.hpp"

namespace cha::test {

// Independently sourced constants, used as fixtures only. 60 decimals each.
inline const char* kPiOver4 =
    "0.785398163397448309615660845819875721049292349843776455243736";
inline const char* kPi =
    "3.141592653589793238462643383279502884197169399375105820974945";
inline const char* kLn2 =
    "0.693147180559945309417232121458176568075500134360255254120680";
inline const char* kOneMinusLn2 =
    "0.306852819440054690582767878541823431924499865639744745879320";

inline Rational fixture(const char* text) { return parse_decimal(text); }

// Independent oracle for reduites: evaluates the nested fraction bottom-up
// with plain rational arithmetic, never touching the integer convergent
// recurrence it is used to check.
inline Rational brute_force_reduite(SeriesParams params, std::int64_t n, std::int64_t m) {
  const Rational a(alpha(params, n));
  Rational acc = a;
  for (std::int64_t j = m; j >= 1; --j) {
    const Rational numer(params.p * j * params.p * j);
    acc = a + numer / acc;
  }
  return acc.reciprocal();
}

}  // namespace cha::test
