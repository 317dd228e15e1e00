// SPDX-License-Identifier: Apache-2.0
#include "cha/decimal.hpp"

#include <cctype>
#include <stdexcept>

namespace cha {

namespace {

// floor division with remainder, both operands positive.
void divide(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

}  // namespace

std::string DecimalRendering::to_string() const {
  const std::int64_t frac_len = -exponent;
  std::string out;
  if (negative) out += '-';
  if (frac_len <= 0) {
    out += digits;
    for (std::int64_t i = 0; i < exponent; ++i) out += '0';
    return out;
  }
  const auto split = digits.size() - static_cast<std::size_t>(frac_len);
  out += digits.substr(0, split);
  out += '.';
  out += digits.substr(split);
  return out;
}

Rational DecimalRendering::value() const {
  BigInt scaled;
  mpz_set_str(scaled.get_mpz_t(), digits.c_str(), 10);
  if (negative) scaled = -scaled;
  if (exponent >= 0) return Rational(BigInt(scaled * pow10(exponent)));
  return Rational(scaled, pow10(-exponent));
}

DecimalRendering to_decimal(const Rational& x, std::int64_t d, RoundingMode mode,
                            const Limits& limits) {
  if (d < 0) throw std::invalid_argument("to_decimal: negative digit count");
  if (d > limits.max_decimals) {
    throw ResourceLimitError("to_decimal: digit count exceeds the configured maximum");
  }

  const BigInt num = abs(x).numerator() * pow10(d);
  const BigInt den = x.denominator();
  BigInt scaled, rem;
  divide(num, den, scaled, rem);
  if (mode == RoundingMode::round_half_even && sgn(rem) != 0) {
    const int c = cmp(BigInt(2 * rem), den);
    if (c > 0 || (c == 0 && mpz_odd_p(scaled.get_mpz_t()))) scaled += 1;
  }

  DecimalRendering out;
  out.mode = mode;
  out.exponent = -d;
  out.negative = x.sign() < 0 && sgn(scaled) != 0;
  out.digits = scaled.get_str();
  if (const auto want = static_cast<std::size_t>(d) + 1; out.digits.size() < want) {
    out.digits.insert(0, want - out.digits.size(), '0');
  }
  return out;
}

Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_decimal: empty string");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::int64_t frac_len = -1;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (frac_len >= 0) throw std::invalid_argument("parse_decimal: two points in '" + text + "'");
      frac_len = 0;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (frac_len >= 0) ++frac_len;
    } else {
      throw std::invalid_argument("parse_decimal: bad character in '" + text + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("parse_decimal: no digits in '" + text + "'");
  BigInt scaled;
  mpz_set_str(scaled.get_mpz_t(), digits.c_str(), 10);
  if (negative) scaled = -scaled;
  if (frac_len <= 0) return Rational(scaled);
  return Rational(scaled, pow10(frac_len));
}

std::string to_scientific(const Rational& x, int significant) {
  if (significant < 1) throw std::invalid_argument("to_scientific: need at least one digit");
  if (x.is_zero()) return "0";

  const Rational mag = abs(x);
  std::int64_t e = floor_log10(mag);
  auto mantissa_at = [&](std::int64_t exp10) {
    const Rational scaled =
        exp10 >= 0 ? mag / Rational(pow10(exp10)) : mag * Rational(pow10(-exp10));
    return to_decimal(scaled, significant - 1, RoundingMode::round_half_even);
  };
  DecimalRendering m = mantissa_at(e);
  if (m.digits.size() > static_cast<std::size_t>(significant)) {
    // rounding carried the mantissa to 10.00..; renormalize
    ++e;
    m = mantissa_at(e);
  }

  std::string out;
  if (x.sign() < 0) out += '-';
  out += m.digits[0];
  if (significant > 1) {
    out += '.';
    out += m.digits.substr(1);
  }
  out += 'e';
  out += (e < 0 ? "-" : "+");
  const std::int64_t ae = e < 0 ? -e : e;
  if (ae < 10) out += '0';
  out += std::to_string(ae);
  return out;
}

}  // namespace cha
