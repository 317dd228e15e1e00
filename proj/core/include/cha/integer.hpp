// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace cha {

// Arbitrary-precision integer. GMP supplies the arithmetic; everything the
// library computes with these values is exact.
using BigInt = mpz_class;

BigInt pow10(std::int64_t d);
BigInt ipow(const BigInt& base, std::int64_t exponent);
BigInt factorial(std::int64_t n);

// log10 of a positive big integer, accurate to ~1e-12 absolute for operands
// up to about 10^5 digits.
double approx_log10(const BigInt& value);

}  // namespace cha
