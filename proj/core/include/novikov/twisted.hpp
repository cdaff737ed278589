#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "novikov/group_ring.hpp"
#include "novikov/quotient.hpp"

namespace novikov {

/// Structure functions of the twisted group ring (QH)Q induced by
/// beta: G -> Q and the section s: nu(q) is conjugation by s(q) and
/// mu(q, p) = s(q) s(p) s(qp)^-1, an element of H.
struct StructureFunctions {
  std::vector<Word> nu;               // conjugating element s(q)
  std::vector<std::vector<Word>> mu;  // mu[q][p], a key in H
};

/// Computes nu and mu and checks both defining identities exhaustively over
/// Q x Q (x Q). Throws QuotientError naming the first counterexample.
StructureFunctions structure_functions(const Group& group, const FiniteQuotient& quotient);

/// x = sum_q x_q q with every x_q supported in H.
class CosetSplitElement {
 public:
  CosetSplitElement(GroupPtr group, const FiniteQuotient& quotient);

  const GroupPtr& group() const { return group_; }
  const FiniteQuotient& quotient() const { return *quotient_; }
  std::size_t order() const { return parts_.size(); }
  const RingElement& part(std::size_t q) const { return parts_[q]; }
  RingElement& part(std::size_t q) { return parts_[q]; }
  bool is_zero() const;

  /// The basis element q, i.e. 1 * q.
  static CosetSplitElement basis(GroupPtr group, const FiniteQuotient& quotient, std::size_t q);

  CosetSplitElement& operator+=(const CosetSplitElement& other);
  CosetSplitElement operator-() const;
  friend CosetSplitElement operator+(CosetSplitElement a, const CosetSplitElement& b) {
    return a += b;
  }
  friend bool operator==(const CosetSplitElement& a, const CosetSplitElement& b) {
    return a.parts_ == b.parts_;
  }

 private:
  GroupPtr group_;
  const FiniteQuotient* quotient_;
  std::vector<RingElement> parts_;
};

CosetSplitElement split_by_cosets(const RingElement& x, const FiniteQuotient& quotient);

/// s(sum x_q q) = sum x_q s(q).
RingElement reassemble(const CosetSplitElement& element);

/// Twisted convolution r g * r' g' = r nu(g)(r') mu(g, g') gg', computed
/// from the structure functions without passing through QG.
CosetSplitElement twisted_multiply(const CosetSplitElement& x, const CosetSplitElement& y,
                                   const StructureFunctions& structure);

}  // namespace novikov
