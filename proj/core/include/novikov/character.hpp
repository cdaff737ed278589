#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/group.hpp"
#include "novikov/quotient.hpp"
#include "novikov/real_value.hpp"

namespace novikov {

/// A homomorphism from the free abelianisation Z^r to the reals, stored as
/// the images of the r basis vectors.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<RealValue> columns, std::optional<std::string> label = {})
      : columns_(std::move(columns)), label_(std::move(label)) {}

  /// Rational character with the given images of the basis vectors.
  static Character rational(const std::vector<Rational>& images);

  std::size_t rank() const { return columns_.size(); }
  const std::vector<RealValue>& columns() const { return columns_; }
  const std::optional<std::string>& label() const { return label_; }
  bool is_zero() const;
  bool is_rational() const;

  /// Value on a vector of Z^r. Throws RankMismatch.
  RealValue evaluate(const AbelianVector& v) const;

  Character operator-() const;
  Character scaled(const Rational& factor) const;

  friend bool operator==(const Character& a, const Character& b) { return a.columns_ == b.columns_; }

 private:
  std::vector<RealValue> columns_;
  std::optional<std::string> label_;
};

/// phi(g) for an element key of `group`. Throws RankMismatch.
RealValue evaluate(const Character& character, const Group& group, const Word& key);

/// True iff the character is injective on Z^rank, i.e. its columns are
/// linearly independent over Q in the basis (1, sqrt(p), ...).
bool is_irrational(const Character& character, std::size_t rank);

/// A translation-invariant total order on Z^r refining phi: compare by
/// value, then by the first abelianisation coordinate where they differ
/// (a larger coordinate is smaller, so e_1 < e_2 < ... when phi vanishes).
class CompatibleOrder {
 public:
  CompatibleOrder(const Group& group, Character character)
      : group_(&group), character_(std::move(character)) {}

  const Character& character() const { return character_; }
  const Group& group() const { return *group_; }

  std::weak_ordering compare(const Word& g, const Word& h) const;
  std::weak_ordering compare_abelian(const AbelianVector& u, const AbelianVector& v) const;

 private:
  const Group* group_;
  Character character_;
};

/// phi restricted to a finite-index subgroup, in the subgroup's own
/// abelianisation coordinates.
Character restrict_character(const Character& phi, const Group& ambient, const Group& subgroup);

/// psi^q(x) = psi(s(q) x s(q)^-1) for a character psi on H = ker(beta).
/// `subgroup` must be the group built by make_subgroup from `quotient`.
Character conjugate_character(const Character& psi, std::size_t q, const FiniteQuotient& quotient,
                              const Group& subgroup);

}  // namespace novikov
