#pragma once

#include <cstddef>
#include <vector>

#include "novikov/character.hpp"
#include "novikov/twisted.hpp"

namespace novikov {

/// Everything needed to evaluate Q-values of a character psi on H = ker beta:
/// the conjugates psi^p and the section-power terms psi(s(q)^|Q|) / |Q|.
class QValuation {
 public:
  /// `subgroup` must come from make_subgroup(ambient, quotient).
  QValuation(const Character& psi, const FiniteQuotient& quotient, const Group& subgroup);

  const Character& psi() const { return psi_; }
  const std::vector<Character>& conjugates() const { return conjugates_; }
  const RealValue& section_term(std::size_t q) const { return section_terms_[q]; }
  const FiniteQuotient& quotient() const { return *quotient_; }
  const Group& subgroup() const { return *subgroup_; }

  /// min over p, q of psi^p(x_q) + psi(s(q)^|Q|)/|Q|; +inf for x = 0.
  ExtendedValue qvalue(const CosetSplitElement& x) const;
  /// Q-value of an element of QH placed at q = 1.
  ExtendedValue qvalue(const RingElement& x_in_h) const;
  /// Q-value of the basis element q.
  RealValue qvalue_of(std::size_t q) const { return section_terms_[q]; }

  /// max over p, q of |qval(mu(p, q)) - qval(p) - qval(q) + qval(pq)|.
  RealValue qdefect() const;

 private:
  Character psi_;
  const FiniteQuotient* quotient_;
  const Group* subgroup_;
  std::vector<Character> conjugates_;
  std::vector<RealValue> section_terms_;
};

ExtendedValue qvalue(const Character& psi, const CosetSplitElement& x, const Group& subgroup);
RealValue qdefect(const Character& psi, const FiniteQuotient& quotient, const Group& subgroup);

/// Truncated inverse of x + y built as sum_i (-x^-1 y)^i x^-1, for x whose
/// inverse is exact in QG (a monomial, or supplied by the caller) and
///   qval(y) + qval(x^-1) - 2 |psi|_Q > 0.
/// Terms are added until both residuals (x + y) z - 1 and z (x + y) - 1 are
/// certified to have Q-value >= cutoff; both are then recomputed exactly.
struct InvertSumResult {
  CosetSplitElement inverse;
  RealValue margin;      // qval(y) + qval(x^-1) - 2|psi|_Q
  RealValue epsilon;     // qval(x^-1 y) - |psi|_Q
  RealValue defect;
  std::size_t terms = 0;
  ExtendedValue left_residual;   // qval((x + y) z - 1)
  ExtendedValue right_residual;  // qval(z (x + y) - 1)
};

/// Throws HypothesisViolation or StrictGapViolation (x not invertible in QG).
InvertSumResult invert_sum(const CosetSplitElement& x, const CosetSplitElement& y,
                           const QValuation& valuation, const RealValue& cutoff,
                           const CosetSplitElement* x_inverse = nullptr,
                           std::size_t max_terms = 256);

}  // namespace novikov
