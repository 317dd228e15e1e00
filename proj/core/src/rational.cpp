// SPDX-License-Identifier: Apache-2.0
#include "cha/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cha {

namespace {

// x <=> 10^e by cross-multiplication; x must be positive.
int compare_with_pow10(const Rational& x, std::int64_t e) {
  const BigInt num = x.numerator();
  const BigInt den = x.denominator();
  if (e >= 0) {
    return cmp(num, BigInt(den * pow10(e)));
  }
  return cmp(BigInt(num * pow10(-e)), den);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::from_fraction_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    BigInt n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0) {
      throw std::invalid_argument("Rational: cannot parse integer '" + text + "'");
    }
    return Rational(n);
  }
  BigInt n, d;
  if (mpz_set_str(n.get_mpz_t(), text.substr(0, slash).c_str(), 10) != 0 ||
      mpz_set_str(d.get_mpz_t(), text.substr(slash + 1).c_str(), 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse fraction '" + text + "'");
  }
  return Rational(n, d);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_fraction_string() const {
  std::string s = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    s += '/';
    s += value_.get_den().get_str();
  }
  return s;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

double approx_log10(const Rational& x) {
  if (x.is_zero()) throw std::domain_error("approx_log10: zero argument");
  return approx_log10(x.numerator()) - approx_log10(x.denominator());
}

std::int64_t floor_log10(const Rational& x) {
  if (x.sign() <= 0) throw std::domain_error("floor_log10: argument must be positive");
  auto e = static_cast<std::int64_t>(std::floor(approx_log10(x)));
  // The estimate is within 1e-10 of the truth; one exact nudge each way
  // settles boundary cases.
  while (compare_with_pow10(x, e) < 0) --e;
  while (compare_with_pow10(x, e + 1) >= 0) ++e;
  return e;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_fraction_string();
}

}  // namespace cha
