// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "cha/integer.hpp"

namespace cha {

// Exact rational number, always in lowest terms with a positive denominator.
// Arithmetic never rounds; two values compare equal iff they are the same
// rational.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& n) : value_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_fraction_string(const std::string& text);  // "num/den" or "num"

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return mpq_equal(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = mpq_cmp(lhs.value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return c <=> 0;
  }

  // "num/den", or just "num" for integers.
  std::string to_fraction_string() const;

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

// log10|x| for x != 0; accuracy as approx_log10(BigInt).
double approx_log10(const Rational& x);

// Exact floor(log10 x) for x > 0: the unique e with 10^e <= x < 10^(e+1).
std::int64_t floor_log10(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace cha
