// SPDX-License-Identifier: Apache-2.0
#include "cha/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace cha {

namespace {

// width < 10^-digits, exactly.
bool width_below(const Rational& width, std::int64_t digits) {
  return cmp(BigInt(width.numerator() * pow10(digits)), width.denominator()) < 0;
}

Rational pow10_rational(std::int64_t e) {
  if (e >= 0) return Rational(pow10(e));
  return Rational(BigInt(1), pow10(-e));
}

// floor(-log10 e) for e > 0.
std::int64_t floor_neg_log10(const Rational& e) {
  const std::int64_t fl = floor_log10(e);
  return e == pow10_rational(fl) ? -fl : -fl - 1;
}

}  // namespace

ReferenceSum reference_sum(SeriesParams params, std::int64_t target_digits,
                           const Limits& limits) {
  if (target_digits < 1) {
    throw std::invalid_argument("reference_sum: target_digits must be positive");
  }
  if (target_digits > limits.max_oracle_digits) {
    throw ResourceLimitError("reference_sum: target_digits exceeds the configured maximum");
  }

  // The diagonal enclosure gains at least ~1.47 digits per step; 1.4
  // undershoots safely and the doubling loop absorbs the slack.
  std::int64_t k = (target_digits * 10) / 14 + 8;
  for (;;) {
    if (k > limits.max_reduite_order || k > limits.max_sum_order) {
      throw ResourceLimitError("reference_sum: enclosure order exceeds the configured maximum");
    }
    Enclosure enc = sum_enclosure(params, k, k, limits);
    const Rational width = enc.width();
    if (width_below(width, target_digits)) {
      ReferenceSum out{params, std::move(enc), 0, k};
      out.guaranteed_digits = -floor_log10(width) - 1;
      return out;
    }
    k *= 2;
  }
}

double ErrorInterval::relative_width() const {
  if (lo.is_zero()) return std::numeric_limits<double>::infinity();
  return ((hi - lo) / lo).to_double();
}

ErrorInterval certified_error(const Rational& x, const ReferenceSum& ref) {
  const Enclosure& enc = ref.enclosure;
  if (x < enc.lo) return {enc.lo - x, enc.hi - x};
  if (x > enc.hi) return {x - enc.hi, x - enc.lo};
  const Rational left = x - enc.lo;
  const Rational right = enc.hi - x;
  return {Rational(0), left < right ? right : left};
}

std::optional<std::int64_t> digits_correct(const Rational& x, const ReferenceSum& ref) {
  const ErrorInterval err = certified_error(x, ref);
  if (err.lo.is_zero() || err.hi.is_zero()) return std::nullopt;
  const std::int64_t from_hi = floor_neg_log10(err.hi);
  const std::int64_t from_lo = floor_neg_log10(err.lo);
  if (from_hi != from_lo) return std::nullopt;
  return from_hi < 0 ? 0 : from_hi;
}

std::shared_ptr<const ReferenceSum> OracleCache::get_or_compute(SeriesParams params,
                                                                std::int64_t target_digits,
                                                                const Limits& limits) {
  const std::tuple<std::int64_t, std::int64_t, std::int64_t> key{params.p, params.q,
                                                                 target_digits};
  {
    std::lock_guard lock(mutex_);
    if (enabled_) {
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
  }
  auto computed = std::make_shared<const ReferenceSum>(reference_sum(params, target_digits, limits));
  std::lock_guard lock(mutex_);
  if (!enabled_) return computed;
  auto [it, inserted] = entries_.emplace(key, std::move(computed));
  return it->second;
}

void OracleCache::set_enabled(bool enabled) {
  std::lock_guard lock(mutex_);
  enabled_ = enabled;
  if (!enabled) entries_.clear();
}

void OracleCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

OracleCache& OracleCache::global() {
  static OracleCache cache;
  return cache;
}

std::shared_ptr<const ReferenceSum> get_reference(SeriesParams params,
                                                  std::int64_t target_digits,
                                                  const Limits& limits, OracleCache* cache) {
  if (cache != nullptr) return cache->get_or_compute(params, target_digits, limits);
  return std::make_shared<const ReferenceSum>(reference_sum(params, target_digits, limits));
}

}  // namespace cha
