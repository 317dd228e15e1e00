// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cha/common.hpp"
#include "cha/rational.hpp"
#include "cha/series.hpp"

namespace cha {

// Strictly increasing index map used by the semi-extracted diagonal
// accelerator: it stretches the partial-sum order while the reduite order
// advances one step at a time. A closed set of forms keeps the CLI
// serializable and guarantees monotonicity by construction.
struct ExtractorSpec {
  enum class Form { identity, linear, square, cube, power, geometric };

  Form form = Form::identity;
  std::int64_t parameter = 0;  // c for linear, e for power, base for geometric

  static ExtractorSpec identity() { return {Form::identity, 0}; }
  static ExtractorSpec linear(std::int64_t c);
  static ExtractorSpec square() { return {Form::square, 2}; }
  static ExtractorSpec cube() { return {Form::cube, 3}; }
  static ExtractorSpec power(std::int64_t e);
  static ExtractorSpec geometric(std::int64_t base);

  // "identity", "linear3", "square", "cube", "pow4", "geom2".
  static ExtractorSpec parse(std::string_view text);
  std::string name() const;

  std::int64_t evaluate(std::int64_t n) const;

  // True when n = o(zeta(n)), the hypothesis behind the superlinear claim.
  // linear and identity forms are accepted but flagged non-superlinear.
  bool superlinear() const;
};

// The shared acceleration kernel: partial_sum(n) + (-1)^(n+1) rho_m^(n).
// The U, V, W and semi-extracted variants are this one value read along
// different index axes.
Rational accel_value(SeriesParams params, std::int64_t m, std::int64_t n,
                     const Limits& limits = default_limits());

// Fixed reduite order m, partial-sum order running over n_range.
std::vector<Rational> u_sequence(SeriesParams params, std::int64_t m,
                                 IndexRange n_range,
                                 const Limits& limits = default_limits());

// Fixed partial-sum order n, reduite order running over m_range. One
// convergent stream pass, not count(m_range) independent restarts.
std::vector<Rational> v_sequence(SeriesParams params, std::int64_t n,
                                 IndexRange m_range,
                                 const Limits& limits = default_limits());

// Diagonal m = n.
Rational w_value(SeriesParams params, std::int64_t n,
                 const Limits& limits = default_limits());

// Diagonal values over a range, sharing one partial-sum stream.
std::vector<Rational> w_sequence(SeriesParams params, IndexRange n_range,
                                 const Limits& limits = default_limits());

// Semi-extracted diagonal: reduite order n, partial-sum order zeta(n).
Rational w_zeta_value(SeriesParams params, const ExtractorSpec& zeta, std::int64_t n,
                      const Limits& limits = default_limits());

// Aitken delta-squared of three consecutive values, in the quotient form
// (x2 x0 - x1^2) / ((x2 - x1) - (x1 - x0)). Arithmetic is exact, so the
// numerically-stabilized rearrangement would buy nothing.
// Throws std::domain_error when the second difference vanishes.
Rational aitken_delta2(const Rational& x0, const Rational& x1, const Rational& x2);

// Aitken applied to (partial_sum(n-2), partial_sum(n-1), partial_sum(n)) for
// n over n_range; requires n_range.first >= 2. Each output equals
// accel_value(params, 0, n-1) exactly.
std::vector<Rational> aitken_sequence(SeriesParams params, IndexRange n_range,
                                      const Limits& limits = default_limits());

}  // namespace cha
