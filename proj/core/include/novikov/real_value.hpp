#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

/// An exact real number c_0 + c_1 sqrt(p_1) + ... + c_k sqrt(p_k) with
/// rational c_i and distinct primes p_i. Radicand 1 carries the rational part.
///
/// Only the additive structure is exposed: characters are homomorphisms
/// into the reals, so values are sums and rational multiples of the
/// character's coefficients.
class RealValue {
 public:
  using Term = std::pair<std::uint32_t, Rational>;  // radicand, coefficient

  RealValue() = default;
  RealValue(const Rational& rational);  // NOLINT(google-explicit-constructor)
  RealValue(long value) : RealValue(Rational(value)) {}  // NOLINT
  RealValue(int value) : RealValue(Rational(value)) {}  // NOLINT

  /// coefficient * sqrt(radicand); radicand must be 1 or a prime.
  static RealValue sqrt_term(std::uint32_t radicand, const Rational& coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }
  Rational coefficient(std::uint32_t radicand) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  RealValue& operator+=(const RealValue& other);
  RealValue& operator-=(const RealValue& other);
  RealValue& operator*=(const Rational& scalar);
  RealValue operator-() const;

  friend RealValue operator+(RealValue a, const RealValue& b) { return a += b; }
  friend RealValue operator-(RealValue a, const RealValue& b) { return a -= b; }
  friend RealValue operator*(RealValue a, const Rational& s) { return a *= s; }
  friend RealValue operator*(const Rational& s, RealValue a) { return a *= s; }

  friend bool operator==(const RealValue& a, const RealValue& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const RealValue& a, const RealValue& b);

  double approx() const;
  /// "3 - 2*sqrt(2)".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // sorted by radicand, no zero coefficients
};

/// Exact sign in {-1, 0, +1}. A floating-point interval decides when it
/// excludes zero; otherwise the sign is settled exactly by squaring inside
/// the multiquadratic field.
int sign(const RealValue& value);

RealValue abs(const RealValue& value);

/// A value in (-inf, +inf]; the empty optional is +inf.
class ExtendedValue {
 public:
  ExtendedValue() = default;  // +inf
  ExtendedValue(RealValue value) : value_(std::move(value)) {}  // NOLINT
  ExtendedValue(const Rational& value) : value_(RealValue(value)) {}  // NOLINT
  ExtendedValue(long value) : value_(RealValue(value)) {}  // NOLINT
  ExtendedValue(int value) : value_(RealValue(value)) {}  // NOLINT

  static ExtendedValue infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const RealValue& value() const { return *value_; }

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.is_infinite() || b.is_infinite()) return {};
    return ExtendedValue(*a.value_ + *b.value_);
  }
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) = default;
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

  std::string to_string() const { return value_ ? value_->to_string() : "inf"; }

 private:
  std::optional<RealValue> value_;
};

ExtendedValue min(const ExtendedValue& a, const ExtendedValue& b);
ExtendedValue max(const ExtendedValue& a, const ExtendedValue& b);

}  // namespace novikov
