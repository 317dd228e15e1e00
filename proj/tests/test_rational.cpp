// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "cha/decimal.hpp"
#include "cha/integer.hpp"
#include "cha/rational.hpp"

using cha::BigInt;
using cha::DecimalRendering;
using cha::Rational;
using cha::RoundingMode;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).denominator() == 1);
  CHECK(Rational(6, 3).numerator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK(Rational(5, 7).reciprocal() == Rational(7, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("field identities over random fractions") {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<std::int64_t> num(-500, 500);
  std::uniform_int_distribution<std::int64_t> den(1, 500);
  for (int i = 0; i < 300; ++i) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 5) > Rational(4, 3));
  CHECK(cha::abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("fraction strings round-trip") {
  CHECK(Rational(-3, 4).to_fraction_string() == "-3/4");
  CHECK(Rational(5).to_fraction_string() == "5");
  CHECK(Rational::from_fraction_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_fraction_string("42") == Rational(42));
  CHECK(Rational::from_fraction_string("3781715948011520/1203757572990973").numerator() ==
        BigInt("3781715948011520"));
  CHECK_THROWS_AS(Rational::from_fraction_string("x/y"), std::invalid_argument);
}

TEST_CASE("floor_log10 handles boundaries exactly") {
  CHECK(cha::floor_log10(Rational(1)) == 0);
  CHECK(cha::floor_log10(Rational(9)) == 0);
  CHECK(cha::floor_log10(Rational(10)) == 1);
  CHECK(cha::floor_log10(Rational(1, 10)) == -1);
  CHECK(cha::floor_log10(Rational(1, 1000)) == -3);
  CHECK(cha::floor_log10(Rational(999, 1000)) == -1);
  CHECK(cha::floor_log10(Rational(BigInt(1), cha::pow10(100))) == -100);
  CHECK(cha::floor_log10(Rational(cha::pow10(100) - 1, cha::pow10(100))) == -1);
  CHECK(cha::floor_log10(Rational(cha::pow10(57))) == 57);
  CHECK_THROWS_AS(cha::floor_log10(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(cha::floor_log10(Rational(-1)), std::domain_error);
}

TEST_CASE("approx_log10 is close on large operands") {
  const Rational x(cha::pow10(2000) + 1, cha::pow10(1000));
  CHECK(cha::approx_log10(x) == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("decimal rendering: spec examples") {
  CHECK(cha::to_decimal(Rational(1, 4), 3).to_string() == "0.250");
  CHECK(cha::to_decimal(Rational(2, 3), 5).to_string() == "0.66667");
  CHECK(cha::to_decimal(Rational(19, 24), 6, RoundingMode::truncate).to_string() == "0.791666");
}

TEST_CASE("decimal rendering: rounding modes") {
  CHECK(cha::to_decimal(Rational(1, 8), 2).to_string() == "0.12");   // ties to even
  CHECK(cha::to_decimal(Rational(3, 8), 2).to_string() == "0.38");
  CHECK(cha::to_decimal(Rational(-19, 24), 6, RoundingMode::truncate).to_string() ==
        "-0.791666");
  CHECK(cha::to_decimal(Rational(-2, 3), 5).to_string() == "-0.66667");
  CHECK(cha::to_decimal(Rational(0), 4).to_string() == "0.0000");
  CHECK(cha::to_decimal(Rational(123), 0).to_string() == "123");
  CHECK(cha::to_decimal(Rational(1234, 10), 2).to_string() == "123.40");
}

TEST_CASE("decimal rendering round-trips within 10^-d") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 99991);
  std::uniform_int_distribution<std::int64_t> digits(0, 12);
  for (int i = 0; i < 300; ++i) {
    const Rational x(num(rng), den(rng));
    const std::int64_t d = digits(rng);
    for (const auto mode : {RoundingMode::round_half_even, RoundingMode::truncate}) {
      const DecimalRendering rendered = cha::to_decimal(x, d, mode);
      const Rational back = cha::parse_decimal(rendered.to_string());
      CHECK(back == rendered.value());
      CHECK(cha::abs(back - x) <= Rational(BigInt(1), cha::pow10(d)));
    }
  }
}

TEST_CASE("decimal digit guard") {
  cha::Limits limits;
  limits.max_decimals = 10;
  CHECK_THROWS_AS(cha::to_decimal(Rational(1, 3), 11, RoundingMode::round_half_even, limits),
                  cha::ResourceLimitError);
  CHECK_THROWS_AS(cha::to_decimal(Rational(1, 3), -1), std::invalid_argument);
}

TEST_CASE("parse_decimal rejects junk") {
  CHECK(cha::parse_decimal("-12.75") == Rational(-51, 4));
  CHECK(cha::parse_decimal("3") == Rational(3));
  CHECK_THROWS_AS(cha::parse_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(cha::parse_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(cha::parse_decimal("12a"), std::invalid_argument);
}

TEST_CASE("scientific rendering") {
  CHECK(cha::to_scientific(Rational(0), 5) == "0");
  CHECK(cha::to_scientific(Rational(1, 4), 3) == "2.50e-01");
  CHECK(cha::to_scientific(Rational(-1, 4), 3) == "-2.50e-01");
  CHECK(cha::to_scientific(Rational(12345), 4) == "1.234e+04");  // ties to even
  CHECK(cha::to_scientific(Rational(99999, 10000), 3) == "1.00e+01");  // carry renormalizes
  CHECK(cha::to_scientific(Rational(BigInt(743), cha::pow10(19)), 3) == "7.43e-17");
  CHECK(cha::to_scientific(Rational(1000000), 1) == "1e+06");
}
