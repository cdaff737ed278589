#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "novikov/character.hpp"
#include "novikov/group.hpp"
#include "novikov/rational.hpp"
#include "novikov/real_value.hpp"

namespace novikov {

/// A finitely supported element of QG. Keys are normal forms in shortlex
/// order; no zero coefficients are stored.
class RingElement {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;

  explicit RingElement(GroupPtr group) : group_(std::move(group)) {}
  RingElement(GroupPtr group, Terms terms);

  static RingElement zero(GroupPtr group) { return RingElement(std::move(group)); }
  static RingElement one(GroupPtr group) { return monomial(std::move(group), {}, 1); }
  /// coefficient * g; `key` must already be a normal form.
  static RingElement monomial(GroupPtr group, Word key, const Rational& coefficient = 1);
  /// coefficient * (element represented by a generator word).
  static RingElement from_generator_word(GroupPtr group, const Word& word,
                                         const Rational& coefficient = 1);

  const GroupPtr& group() const { return group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& key) const;

  /// Adds coefficient * key, dropping the term if it cancels.
  void add_term(const Word& key, const Rational& coefficient);

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Rational& scalar);
  RingElement operator-() const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
  friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
  friend RingElement operator*(const RingElement& a, const RingElement& b) { return multiply(a, b); }

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

  friend RingElement multiply(const RingElement& x, const RingElement& y);

  /// Left multiplication by a group element, right multiplication likewise.
  RingElement left_translate(const Word& key) const;
  RingElement right_translate(const Word& key) const;
  /// g x g^-1.
  RingElement conjugate(const Word& by) const;

  std::string to_string() const;

 private:
  GroupPtr group_;
  Terms terms_;
};

/// min phi(supp x); +inf for x = 0.
ExtendedValue valuation(const RingElement& x, const Character& character);

/// The order-minimal monomial of x (ties beyond the compatible order are
/// broken by shortlex). `strict` reports whether every other support element
/// has strictly larger phi-value. Throws std::invalid_argument for x = 0.
struct LeadingTerm {
  Word key;
  Rational coefficient;
  RealValue value;
  bool strict = false;
};

LeadingTerm leading_term(const RingElement& x, const CompatibleOrder& order);

}  // namespace novikov
