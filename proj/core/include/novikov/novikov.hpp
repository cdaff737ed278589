#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "novikov/character.hpp"
#include "novikov/group_ring.hpp"

namespace novikov {

using CharacterPtr = std::shared_ptr<const Character>;

/// Element of the Novikov ring of (G, phi) known modulo terms of value
/// >= cutoff. The body holds exactly the terms of value < cutoff; an
/// infinite cutoff means the element is exact.
class NovikovElement {
 public:
  /// Terms of `body` at or above the cutoff are discarded.
  NovikovElement(RingElement body, CharacterPtr character,
                 ExtendedValue cutoff = ExtendedValue::infinity());

  static NovikovElement zero(GroupPtr group, CharacterPtr character,
                             ExtendedValue cutoff = ExtendedValue::infinity());
  static NovikovElement one(GroupPtr group, CharacterPtr character,
                            ExtendedValue cutoff = ExtendedValue::infinity());

  const RingElement& body() const { return body_; }
  const Character& character() const { return *character_; }
  const CharacterPtr& character_ptr() const { return character_; }
  const ExtendedValue& cutoff() const { return cutoff_; }
  const GroupPtr& group() const { return body_.group(); }

  ExtendedValue valuation() const;
  /// True iff the known part is zero (the element vanishes mod cutoff).
  bool is_zero() const { return body_.is_zero(); }

  /// Lowers the cutoff, discarding terms at or above it.
  NovikovElement truncated(const ExtendedValue& cutoff) const;

  /// Agreement of the known parts below min(cutoffs).
  bool congruent(const NovikovElement& other) const;

  friend NovikovElement add(const NovikovElement& x, const NovikovElement& y);
  friend NovikovElement subtract(const NovikovElement& x, const NovikovElement& y);
  /// Cutoff min(c_x + phi(y), c_y + phi(x), c_x + c_y); pairs of terms
  /// landing at or above it are never formed.
  friend NovikovElement multiply(const NovikovElement& x, const NovikovElement& y);

  NovikovElement operator-() const;
  friend NovikovElement operator+(const NovikovElement& x, const NovikovElement& y) { return add(x, y); }
  friend NovikovElement operator-(const NovikovElement& x, const NovikovElement& y) {
    return subtract(x, y);
  }
  friend NovikovElement operator*(const NovikovElement& x, const NovikovElement& y) {
    return multiply(x, y);
  }

 private:
  RingElement body_;
  CharacterPtr character_;
  ExtendedValue cutoff_;
};

/// Inverse by geometric series. Writing x = c g (1 - y) with c g the leading
/// monomial, every support element of y must have strictly positive value.
/// The result is correct modulo min(target, c_x - 2 phi(x)); an exact
/// non-monomial x requires a finite target. Throws StrictGapViolation.
NovikovElement invert(const NovikovElement& x, std::optional<ExtendedValue> target = std::nullopt);

/// Dense matrix of Novikov elements with one shared cutoff.
class NovikovMatrix {
 public:
  NovikovMatrix(GroupPtr group, CharacterPtr character, std::size_t rows, std::size_t cols,
                ExtendedValue cutoff = ExtendedValue::infinity());

  static NovikovMatrix identity(GroupPtr group, CharacterPtr character, std::size_t n,
                                ExtendedValue cutoff = ExtendedValue::infinity());
  /// Entries from exact group ring elements.
  static NovikovMatrix from_ring(const std::vector<std::vector<RingElement>>& entries,
                                 GroupPtr group, CharacterPtr character);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ExtendedValue& cutoff() const { return cutoff_; }
  const Character& character() const { return *character_; }
  const CharacterPtr& character_ptr() const { return character_; }
  const GroupPtr& group() const { return group_; }

  const RingElement& body(std::size_t i, std::size_t j) const { return bodies_[i * cols_ + j]; }
  NovikovElement at(std::size_t i, std::size_t j) const;
  /// Stores `value`, lowering the shared cutoff if needed.
  void set(std::size_t i, std::size_t j, const NovikovElement& value);

  /// Minimal valuation over all entries.
  ExtendedValue valuation() const;
  NovikovMatrix truncated(const ExtendedValue& cutoff) const;
  bool congruent(const NovikovMatrix& other) const;
  bool is_identity_mod_cutoff() const;

  friend NovikovMatrix multiply(const NovikovMatrix& a, const NovikovMatrix& b);
  friend NovikovMatrix operator*(const NovikovMatrix& a, const NovikovMatrix& b) { return multiply(a, b); }

  std::vector<std::vector<RingElement>> bodies() const;

 private:
  GroupPtr group_;
  CharacterPtr character_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> bodies_;
  ExtendedValue cutoff_;
};

/// Neumann-series inverse of m = I - M where every entry of M has strictly
/// positive value, or of any square m that elimination brings to that shape.
/// `target` defaults to the matrix cutoff. Verified by multiplying back.
/// Throws ShapeError, StrictGapViolation or InconclusiveAtCutoff.
NovikovMatrix invert_matrix(const NovikovMatrix& m, std::optional<ExtendedValue> target = std::nullopt);

/// Result of valuation-greedy elimination: modulo `cutoff`, L * m * R has
/// a 1 at every pivot position and zeros elsewhere (a permuted identity
/// block when the elimination is complete).
struct Elimination {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // original (row, col)
  NovikovMatrix L;
  NovikovMatrix R;
  NovikovMatrix R_inverse;  // exact inverse of R
  std::vector<RealValue> pivot_gaps;  // strict gap of each pivot
  /// False when the unreduced block still has entries that could not be
  /// certified as units or as zero within the cutoff.
  bool complete = true;
  /// Precision of the pivot form: the requested cutoff lowered by the
  /// negative valuations of the pivot inverses and clearing factors.
  ExtendedValue cutoff;
  std::size_t rank() const { return pivots.size(); }
};

/// Pivots have minimal valuation among entries that are units modulo the
/// cutoff; ties go to the compatible order of the leading monomial, then to
/// row-major position. Every computed quantity is truncated at `cutoff`.
Elimination eliminate(const NovikovMatrix& m, const ExtendedValue& cutoff);

}  // namespace novikov
