#include "novikov/quotient_calculus.hpp"

#include <stdexcept>

#include "novikov/error.hpp"

namespace novikov {

QValuation::QValuation(const Character& psi, const FiniteQuotient& quotient, const Group& subgroup)
    : psi_(psi), quotient_(&quotient), subgroup_(&subgroup) {
  if (psi.rank() != subgroup.abelianization().rank) {
    throw RankMismatch("character rank " + std::to_string(psi.rank()) +
                       " does not match the subgroup's free abelianisation rank " +
                       std::to_string(subgroup.abelianization().rank));
  }
  const std::size_t m = quotient.order();
  for (std::size_t p = 0; p < m; ++p) {
    conjugates_.push_back(conjugate_character(psi, p, quotient, subgroup));
  }
  for (std::size_t q = 0; q < m; ++q) {
    // abelian_image rejects keys outside H.
    Word key = subgroup.normal_form(power(quotient.section(q), static_cast<long>(m)));
    section_terms_.push_back(psi.evaluate(subgroup.abelian_image(key)) *
                             Rational(1, static_cast<long>(m)));
  }
}

ExtendedValue QValuation::qvalue(const RingElement& x_in_h) const {
  ExtendedValue best;
  for (const auto& [key, c] : x_in_h.terms()) {
    AbelianVector image = subgroup_->abelian_image(key);
    for (const Character& conjugate : conjugates_) {
      ExtendedValue v(conjugate.evaluate(image));
      if (v < best) best = std::move(v);
    }
  }
  return best;
}

ExtendedValue QValuation::qvalue(const CosetSplitElement& x) const {
  if (x.order() != quotient_->order()) throw ShapeError("element split over a different quotient");
  ExtendedValue best;
  for (std::size_t q = 0; q < x.order(); ++q) {
    ExtendedValue v = qvalue(x.part(q));
    if (v.is_finite()) best = min(best, v + ExtendedValue(section_terms_[q]));
  }
  return best;
}

RealValue QValuation::qdefect() const {
  const std::size_t m = quotient_->order();
  const Group& group = *subgroup_;
  RealValue worst;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      std::size_t pq = quotient_->multiply(p, q);
      Word mu = group.multiply(group.multiply(quotient_->section(p), quotient_->section(q)),
                               group.invert(quotient_->section(pq)));
      RealValue mu_value = RealValue(0);
      {
        AbelianVector image = group.abelian_image(mu);
        bool first = true;
        for (const Character& conjugate : conjugates_) {
          RealValue v = conjugate.evaluate(image);
          if (first || v < mu_value) mu_value = v;
          first = false;
        }
      }
      RealValue d = abs(mu_value - section_terms_[p] - section_terms_[q] + section_terms_[pq]);
      if (worst < d) worst = d;
    }
  }
  return worst;
}

ExtendedValue qvalue(const Character& psi, const CosetSplitElement& x, const Group& subgroup) {
  return QValuation(psi, x.quotient(), subgroup).qvalue(x);
}

RealValue qdefect(const Character& psi, const FiniteQuotient& quotient, const Group& subgroup) {
  return QValuation(psi, quotient, subgroup).qdefect();
}

namespace {

// Products in (QH)Q are computed through the ring isomorphism with QG.
CosetSplitElement split_product(const CosetSplitElement& a, const CosetSplitElement& b) {
  return split_by_cosets(reassemble(a) * reassemble(b), a.quotient());
}

CosetSplitElement split_one(const CosetSplitElement& like) {
  return CosetSplitElement::basis(like.group(), like.quotient(), 0);
}

}  // namespace

InvertSumResult invert_sum(const CosetSplitElement& x, const CosetSplitElement& y,
                           const QValuation& valuation, const RealValue& cutoff,
                           const CosetSplitElement* x_inverse, std::size_t max_terms) {
  const CosetSplitElement one = split_one(x);
  CosetSplitElement xi(x.group(), x.quotient());
  if (x_inverse != nullptr) {
    xi = *x_inverse;
  } else {
    RingElement sx = reassemble(x);
    if (sx.size() != 1) {
      throw StrictGapViolation("x is not a monomial and no exact inverse was supplied");
    }
    const auto& [key, c] = *sx.terms().begin();
    xi = split_by_cosets(RingElement::monomial(x.group(), x.group()->invert(key), 1 / c),
                         x.quotient());
  }
  if (!(split_product(x, xi) == one) || !(split_product(xi, x) == one)) {
    throw StrictGapViolation("supplied inverse of x is not an exact two-sided inverse");
  }

  InvertSumResult result{xi, RealValue(), RealValue(), valuation.qdefect(), 0, {}, {}};
  const RealValue& defect = result.defect;
  ExtendedValue qy = valuation.qvalue(y);
  ExtendedValue qxi = valuation.qvalue(xi);
  if (qy.is_infinite()) {
    // y = 0: the inverse of x is exact.
    result.margin = RealValue(0);
    result.inverse = xi;
    result.left_residual = ExtendedValue::infinity();
    result.right_residual = ExtendedValue::infinity();
    return result;
  }
  result.margin = qy.value() + qxi.value() - 2 * defect;
  if (sign(result.margin) <= 0) {
    throw HypothesisViolation("qval(y) + qval(x^-1) - 2|psi|_Q = " + result.margin.to_string() +
                              " is not positive");
  }
  CosetSplitElement w = -split_product(xi, y);  // -x^-1 y
  ExtendedValue qw = valuation.qvalue(w);
  result.epsilon = qw.is_infinite() ? RealValue(1) : qw.value() - defect;

  // Residuals: (x + y) z_N - 1 = -x w^N x^-1 and z_N (x + y) - 1 = -w^N with
  // qval(w^N) >= |psi|_Q + N epsilon.
  const RealValue qx = valuation.qvalue(x).value();
  std::size_t n = 1;
  while (true) {
    RealValue power_bound = defect + result.epsilon * Rational(static_cast<long>(n));
    RealValue left_bound = qx + power_bound + qxi.value() - 2 * defect;
    if (!(power_bound < cutoff) && !(left_bound < cutoff)) break;
    if (++n > max_terms) {
      throw InconclusiveAtCutoff("invert_sum needs more than " + std::to_string(max_terms) +
                                 " terms to reach the cutoff");
    }
  }

  CosetSplitElement z(x.group(), x.quotient());
  CosetSplitElement term = xi;
  for (std::size_t i = 0; i < n; ++i) {
    z += term;
    term = split_product(w, term);
  }
  result.inverse = z;
  result.terms = n;
  CosetSplitElement sum = x + y;
  result.left_residual = valuation.qvalue(split_product(sum, z) + -one);
  result.right_residual = valuation.qvalue(split_product(z, sum) + -one);
  if (result.left_residual < ExtendedValue(cutoff) || result.right_residual < ExtendedValue(cutoff)) {
    throw std::logic_error("invert_sum residual below the cutoff despite the hypothesis");
  }
  return result;
}

}  // namespace novikov
