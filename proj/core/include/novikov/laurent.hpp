#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "novikov/abelianization.hpp"
#include "novikov/group_ring.hpp"
#include "novikov/rational.hpp"

namespace novikov {

/// Laurent polynomial over Q in r commuting variables, i.e. an element of
/// Q[Z^r]. Exponent vectors are ordered lexicographically, which is a group
/// order on Z^r, so leading terms are multiplicative.
class LaurentPolynomial {
 public:
  using Terms = std::map<AbelianVector, Rational>;

  explicit LaurentPolynomial(std::size_t variables = 0) : variables_(variables) {}
  static LaurentPolynomial monomial(AbelianVector exponent, const Rational& coefficient = 1);
  static LaurentPolynomial constant(std::size_t variables, const Rational& value);

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const AbelianVector& exponent, const Rational& coefficient);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Exact quotient; throws std::domain_error when the division is not exact.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  std::string to_string() const;

 private:
  std::size_t variables_;
  Terms terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Image of a group ring element under the free abelianisation map.
LaurentPolynomial abelianize(const RingElement& x);

/// Rank over the fraction field Q(x_1, ..., x_r), by fraction-free
/// (Bareiss) elimination with exact division.
std::size_t fraction_field_rank(LaurentMatrix matrix);

}  // namespace novikov
