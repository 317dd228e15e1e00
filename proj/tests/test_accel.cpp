// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cha/accel.hpp"
#include "cha/contfrac.hpp"
#include "cha/decimal.hpp"
#include "cha/oracle.hpp"
#include "test_support.hpp"

using cha::ExtractorSpec;
using cha::IndexRange;
using cha::Rational;
using cha::SeriesParams;

TEST_CASE("kernel: displayed grid values for (2,1)") {
  CHECK(cha::accel_value({2, 1}, 0, 0) == Rational(3, 4));
  CHECK(cha::accel_value({2, 1}, 1, 1) == Rational(40, 51));
  const Rational diag4 = cha::accel_value({2, 1}, 4, 4);
  CHECK(cha::abs(diag4 - cha::parse_decimal("0.785398135")) <= Rational(1, 1000000000));
}

TEST_CASE("u-sequence: fixed reduite order") {
  const auto seq = cha::u_sequence({2, 1}, 0, {0, 2});
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == Rational(3, 4));
  CHECK(seq[1] == Rational(19, 24));
  CHECK(seq[2] == Rational(47, 60));
  CHECK(cha::u_sequence({2, 1}, 0, {1, 1})[0] == cha::accel_value({2, 1}, 0, 1));
  CHECK(cha::u_sequence({1, 2}, 0, {0, 0})[0] == Rational(3, 10));
  CHECK_THROWS_AS(cha::u_sequence({2, 1}, 0, {3, 1}), std::invalid_argument);
}

TEST_CASE("v-sequence: one stream pass equals per-point kernel") {
  const auto row = cha::v_sequence({2, 1}, 0, {0, 4});
  REQUIRE(row.size() == 5);
  for (std::int64_t m = 0; m <= 4; ++m) {
    CHECK(row[m] == cha::accel_value({2, 1}, m, 0));
  }
  // first row of the displayed grid
  CHECK(row[0] == Rational(3, 4));
  CHECK(row[1] == Rational(4, 5));
  CHECK(cha::abs(row[2] - cha::parse_decimal("0.77777778")) <= Rational(1, 100000000));

  const auto pair = cha::v_sequence({1, 1}, 0, {0, 1});
  CHECK(pair[0] == Rational(2, 3));
  CHECK(pair[1] == Rational(7, 10));
}

TEST_CASE("u and v read the same kernel along different axes") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> pq(1, 8);
  std::uniform_int_distribution<std::int64_t> idx(0, 15);
  for (int i = 0; i < 40; ++i) {
    const SeriesParams params{pq(rng), pq(rng)};
    const std::int64_t n = idx(rng);
    const std::int64_t m = idx(rng);
    CHECK(cha::v_sequence(params, n, {m, m})[0] == cha::u_sequence(params, m, {n, n})[0]);
  }
}

TEST_CASE("w: diagonal of the kernel") {
  const Rational w5 = cha::w_value({1, 1}, 5);
  CHECK(cha::abs(w5 - cha::parse_decimal("0.693147179886527")) <=
        Rational(cha::BigInt(1), cha::pow10(15)));

  CHECK(Rational(4) * cha::w_value({2, 1}, 10) ==
        Rational::from_fraction_string("3781715948011520/1203757572990973"));

  CHECK(cha::w_value({1, 10}, 0) == Rational(11, 210));

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> pq(1, 8);
  std::uniform_int_distribution<std::int64_t> nn(0, 20);
  for (int i = 0; i < 30; ++i) {
    const SeriesParams params{pq(rng), pq(rng)};
    const std::int64_t n = nn(rng);
    CHECK(cha::w_value(params, n) == cha::accel_value(params, n, n));
  }

  const auto seq = cha::w_sequence({2, 1}, {0, 6});
  for (std::int64_t n = 0; n <= 6; ++n) CHECK(seq[n] == cha::w_value({2, 1}, n));
}

TEST_CASE("extractors: parsing, evaluation, monotonicity") {
  CHECK(ExtractorSpec::parse("identity").evaluate(7) == 7);
  CHECK(ExtractorSpec::parse("square").evaluate(9) == 81);
  CHECK(ExtractorSpec::parse("cube").evaluate(4) == 64);
  CHECK(ExtractorSpec::parse("pow4").evaluate(3) == 81);
  CHECK(ExtractorSpec::parse("geom2").evaluate(10) == 1024);
  CHECK(ExtractorSpec::parse("linear3").evaluate(5) == 15);
  CHECK(ExtractorSpec::parse("linear").evaluate(5) == 5);
  CHECK(ExtractorSpec::square().name() == "square");
  CHECK(ExtractorSpec::parse("geom3").name() == "geom3");

  CHECK_THROWS_AS(ExtractorSpec::parse("junk"), std::invalid_argument);
  CHECK_THROWS_AS(ExtractorSpec::parse("pow1"), std::invalid_argument);
  CHECK_THROWS_AS(ExtractorSpec::parse("geom1"), std::invalid_argument);
  CHECK_THROWS_AS(ExtractorSpec::parse("linear0"), std::invalid_argument);

  CHECK(ExtractorSpec::square().superlinear());
  CHECK(ExtractorSpec::cube().superlinear());
  CHECK(ExtractorSpec::geometric(2).superlinear());
  CHECK_FALSE(ExtractorSpec::identity().superlinear());
  CHECK_FALSE(ExtractorSpec::linear(4).superlinear());

  for (const char* name : {"identity", "square", "cube", "pow5", "geom2", "linear2"}) {
    const ExtractorSpec spec = ExtractorSpec::parse(name);
    for (std::int64_t n = 0; n < 12; ++n) {
      CHECK(spec.evaluate(n) < spec.evaluate(n + 1));
    }
  }

  CHECK_THROWS_AS(ExtractorSpec::geometric(2).evaluate(100), cha::ResourceLimitError);
}

TEST_CASE("semi-extracted diagonal") {
  // identity reduces to the plain diagonal
  for (const std::int64_t n : {0, 1, 3, 8}) {
    CHECK(cha::w_zeta_value({2, 1}, ExtractorSpec::identity(), n) == cha::w_value({2, 1}, n));
  }
  // zeta(1) = 1 reduces to the displayed (1,1) grid entry
  CHECK(cha::w_zeta_value({2, 1}, ExtractorSpec::square(), 1) == Rational(40, 51));

  // zeta growth trips the partial-sum guard
  cha::Limits limits;
  limits.max_sum_order = 1000;
  CHECK_THROWS_AS(cha::w_zeta_value({2, 1}, ExtractorSpec::geometric(2), 11, limits),
                  cha::ResourceLimitError);
}

TEST_CASE("aitken delta-squared") {
  // exact on geometric sequences: x_k = 1 - r^k
  CHECK(cha::aitken_delta2(Rational(0), Rational(1, 2), Rational(3, 4)) == Rational(1));
  CHECK(cha::aitken_delta2(Rational(1), Rational(2, 3), Rational(13, 15)) == Rational(19, 24));
  CHECK_THROWS_AS(cha::aitken_delta2(Rational(5), Rational(5), Rational(5)), std::domain_error);
  // arithmetic progressions also have vanishing second difference
  CHECK_THROWS_AS(cha::aitken_delta2(Rational(1), Rational(2), Rational(3)), std::domain_error);
}

TEST_CASE("aitken on partial sums reproduces the order-0 accelerated value") {
  const auto seq21 = cha::aitken_sequence({2, 1}, {2, 12});
  for (std::size_t i = 0; i < seq21.size(); ++i) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(i);
    CHECK(seq21[i] == cha::accel_value({2, 1}, 0, n - 1));
  }
  CHECK(seq21[0] == Rational(19, 24));

  CHECK(cha::aitken_sequence({1, 1}, {2, 2})[0] == Rational(7, 10));
  CHECK(cha::aitken_sequence({1, 2}, {3, 3})[0] == cha::accel_value({1, 2}, 0, 2));

  CHECK_THROWS_AS(cha::aitken_sequence({2, 1}, {1, 5}), std::invalid_argument);
}

TEST_CASE("error formula: |accel - S| equals |rho - R| as certified intervals") {
  for (const SeriesParams params : {SeriesParams{2, 1}, {1, 2}, {3, 3}}) {
    for (const std::int64_t n : {0, 1, 5}) {
      for (const std::int64_t m : {0, 2, 7}) {
        const std::int64_t deep = 40;
        const cha::Enclosure sum_enc = cha::sum_enclosure(params, n, deep);
        const cha::Enclosure rem_enc = cha::remainder_enclosure(params, n, deep);
        const cha::ReferenceSum ref{params, sum_enc, 0, deep};

        const Rational x = cha::accel_value(params, m, n);
        const cha::ErrorInterval lhs = cha::certified_error(x, ref);

        const Rational rho = cha::reduite(params, n, m);
        // interval of |rho - R| over R in the remainder enclosure
        Rational lo, hi;
        if (rho < rem_enc.lo) {
          lo = rem_enc.lo - rho;
          hi = rem_enc.hi - rho;
        } else if (rho > rem_enc.hi) {
          lo = rho - rem_enc.hi;
          hi = rho - rem_enc.lo;
        } else {
          lo = Rational(0);
          const Rational left = rho - rem_enc.lo;
          const Rational right = rem_enc.hi - rho;
          hi = left < right ? right : left;
        }
        CHECK(lhs.lo == lo);
        CHECK(lhs.hi == hi);
      }
    }
  }
}

TEST_CASE("interlacing: consecutive reduite orders straddle the sum") {
  for (const SeriesParams params : {SeriesParams{2, 1}, {1, 2}}) {
    for (const std::int64_t n : {0, 3}) {
      const Rational anchor = cha::sum_enclosure(params, n, 40).midpoint();
      int prev_sign = 0;
      for (std::int64_t m = 0; m <= 10; ++m) {
        const int sign = (cha::accel_value(params, m, n) - anchor).sign();
        if (m > 0) CHECK(sign == -prev_sign);
        prev_sign = sign;
      }
    }
  }
}

TEST_CASE("accel guards") {
  cha::Limits limits;
  limits.max_reduite_order = 10;
  limits.max_sum_order = 10;
  CHECK_THROWS_AS(cha::accel_value({2, 1}, 11, 1, limits), cha::ResourceLimitError);
  CHECK_THROWS_AS(cha::accel_value({2, 1}, 1, 11, limits), cha::ResourceLimitError);
  CHECK_THROWS_AS(cha::accel_value({2, 1}, -1, 1, limits), std::invalid_argument);
}
