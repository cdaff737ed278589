#include "novikov/twisted.hpp"

#include "novikov/error.hpp"
#include "novikov/subgroup.hpp"

namespace novikov {

StructureFunctions structure_functions(const Group& group, const FiniteQuotient& quotient) {
  const std::size_t m = quotient.order();
  StructureFunctions sf;
  sf.nu.resize(m);
  sf.mu.assign(m, std::vector<Word>(m));
  for (std::size_t q = 0; q < m; ++q) {
    sf.nu[q] = quotient.section(q);
    for (std::size_t p = 0; p < m; ++p) {
      Word w = group.multiply(quotient.section(q), quotient.section(p));
      sf.mu[q][p] = group.multiply(w, group.invert(quotient.section(quotient.multiply(q, p))));
    }
  }
  auto fail = [&](const std::string& what) {
    throw QuotientError("structure functions violate " + what);
  };
  if (!sf.nu[0].empty()) fail("nu(1) = id");
  for (std::size_t q = 0; q < m; ++q) {
    if (quotient.image_of(group, sf.nu[q]) != q) {
      fail("beta(s(q)) = q at q = " + std::to_string(q) + ", s(q) = " + group.format(sf.nu[q]));
    }
    if (!sf.mu[0][q].empty() || !sf.mu[q][0].empty()) {
      fail("mu(1, q) = mu(q, 1) = 1 at q = " + std::to_string(q));
    }
    for (std::size_t p = 0; p < m; ++p) {
      if (quotient.image_of(group, sf.mu[q][p]) != 0) {
        fail("mu(q, p) in H at (" + std::to_string(q) + ", " + std::to_string(p) + ")");
      }
    }
  }
  // nu(q) nu(p) = conj(mu(q, p)) nu(qp) on generators of H.
  SubgroupPresentation sp = subgroup_presentation(group, quotient, quotient.order());
  std::vector<Word> h_generators;
  for (const Word& w : sp.inclusion) h_generators.push_back(group.embed(w));
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t p = 0; p < m; ++p) {
      std::size_t qp = quotient.multiply(q, p);
      for (const Word& h : h_generators) {
        Word lhs = group.conjugate(sf.nu[q], group.conjugate(sf.nu[p], h));
        Word rhs = group.conjugate(sf.mu[q][p], group.conjugate(sf.nu[qp], h));
        if (lhs != rhs) {
          fail("nu(q) nu(p) = c(mu(q, p)) nu(qp) at (" + std::to_string(q) + ", " +
               std::to_string(p) + ") on " + group.format(h));
        }
      }
      // Cocycle: nu(q)(mu(p, r)) mu(q, pr) = mu(q, p) mu(qp, r).
      for (std::size_t r = 0; r < m; ++r) {
        Word lhs = group.multiply(group.conjugate(sf.nu[q], sf.mu[p][r]),
                                  sf.mu[q][quotient.multiply(p, r)]);
        Word rhs = group.multiply(sf.mu[q][p], sf.mu[qp][r]);
        if (lhs != rhs) {
          fail("the cocycle identity at (" + std::to_string(q) + ", " + std::to_string(p) + ", " +
               std::to_string(r) + ")");
        }
      }
    }
  }
  return sf;
}

CosetSplitElement::CosetSplitElement(GroupPtr group, const FiniteQuotient& quotient)
    : group_(std::move(group)), quotient_(&quotient), parts_(quotient.order(), RingElement(group_)) {}

bool CosetSplitElement::is_zero() const {
  for (const auto& part : parts_) {
    if (!part.is_zero()) return false;
  }
  return true;
}

CosetSplitElement CosetSplitElement::basis(GroupPtr group, const FiniteQuotient& quotient,
                                           std::size_t q) {
  CosetSplitElement x(group, quotient);
  x.parts_[q] = RingElement::one(std::move(group));
  return x;
}

CosetSplitElement& CosetSplitElement::operator+=(const CosetSplitElement& other) {
  if (other.parts_.size() != parts_.size()) throw ShapeError("coset split over different quotients");
  for (std::size_t q = 0; q < parts_.size(); ++q) parts_[q] += other.parts_[q];
  return *this;
}

CosetSplitElement CosetSplitElement::operator-() const {
  CosetSplitElement x = *this;
  for (auto& part : x.parts_) part = -part;
  return x;
}

CosetSplitElement split_by_cosets(const RingElement& x, const FiniteQuotient& quotient) {
  CosetSplitElement out(x.group(), quotient);
  for (const auto& [key, c] : x.terms()) {
    CosetDecomposition d = coset_decompose(*x.group(), key, quotient);
    out.part(d.cls).add_term(d.h, c);
  }
  return out;
}

RingElement reassemble(const CosetSplitElement& element) {
  RingElement out(element.group());
  for (std::size_t q = 0; q < element.order(); ++q) {
    out += element.part(q).right_translate(element.quotient().section(q));
  }
  return out;
}

CosetSplitElement twisted_multiply(const CosetSplitElement& x, const CosetSplitElement& y,
                                   const StructureFunctions& structure) {
  const FiniteQuotient& quotient = x.quotient();
  CosetSplitElement out(x.group(), quotient);
  for (std::size_t q = 0; q < x.order(); ++q) {
    if (x.part(q).is_zero()) continue;
    for (std::size_t p = 0; p < y.order(); ++p) {
      if (y.part(p).is_zero()) continue;
      RingElement twisted = y.part(p).conjugate(structure.nu[q]);
      out.part(quotient.multiply(q, p)) +=
          multiply(x.part(q), twisted).right_translate(structure.mu[q][p]);
    }
  }
  return out;
}

}  // namespace novikov
