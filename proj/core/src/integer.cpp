// SPDX-License-Identifier: Apache-2.0
#include "cha/integer.hpp"

#include <cmath>
#include <stdexcept>

namespace cha {

BigInt pow10(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("pow10: negative exponent");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
  return r;
}

BigInt ipow(const BigInt& base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

double approx_log10(const BigInt& value) {
  static const double log10_2 = std::log10(2.0);
  if (sgn(value) == 0) throw std::domain_error("approx_log10: zero argument");
  signed long exp2 = 0;
  const double mant = std::abs(mpz_get_d_2exp(&exp2, value.get_mpz_t()));
  return std::log10(mant) + static_cast<double>(exp2) * log10_2;
}

}  // namespace cha
