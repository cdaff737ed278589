#include "novikov/selftest.hpp"

#include <functional>

#include "novikov/catalog.hpp"
#include "novikov/chain_complex.hpp"
#include "novikov/error.hpp"
#include "novikov/fibring.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/quotient_calculus.hpp"
#include "novikov/subgroup.hpp"

namespace novikov {

namespace {

using fixtures::Rng;

enum class Outcome { Pass, Fail, Inconclusive };

// Runs `body` `count` times; exceptions count as failures and the first
// failure message is kept as the counterexample.
SuiteResult run_suite(const std::string& name, std::size_t count,
                      const std::function<Outcome(std::size_t, std::string&)>& body) {
  SuiteResult result;
  result.name = name;
  for (std::size_t i = 0; i < count; ++i) {
    std::string why;
    Outcome outcome = Outcome::Fail;
    try {
      outcome = body(i, why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    switch (outcome) {
      case Outcome::Pass: ++result.passed; break;
      case Outcome::Inconclusive: ++result.inconclusive; break;
      case Outcome::Fail:
        ++result.failed;
        if (result.counterexample.empty()) {
          result.counterexample = "instance " + std::to_string(i) + ": " + why;
        }
        break;
    }
  }
  return result;
}

struct SubgroupFixture {
  fixtures::QuotientFixture base;
  GroupPtr subgroup;
};

SubgroupFixture random_subgroup_fixture(const std::vector<GroupPtr>& groups, std::size_t max_order,
                                        Rng& rng) {
  auto q = fixtures::random_quotient(groups, max_order, rng);
  if (!q) throw std::runtime_error("no random quotient found");
  GroupPtr h = make_subgroup(q->group, q->quotient);
  return {std::move(*q), std::move(h)};
}

RingElement in_ambient(const RingElement& x, const GroupPtr& ambient) {
  return RingElement(ambient, x.terms());
}

CosetSplitElement random_split(const SubgroupFixture& f, Rng& rng, std::size_t terms = 3) {
  CosetSplitElement z(f.base.group, f.base.quotient);
  std::size_t parts = 1 + rng() % 3;
  for (std::size_t i = 0; i < parts; ++i) {
    std::size_t q = rng() % f.base.quotient.order();
    z.part(q) += in_ambient(fixtures::random_subgroup_element(f.subgroup, terms, 3, rng), f.base.group);
  }
  return z;
}

CosetSplitElement split_product(const CosetSplitElement& a, const CosetSplitElement& b) {
  return split_by_cosets(reassemble(a) * reassemble(b), a.quotient());
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  std::vector<SuiteResult> results;
  Rng rng(options.seed);
  const auto groups = fixtures::raag_catalog();
  const std::size_t n = options.scale;

  {
    SuiteResult r = run_suite("structure-functions", n, [&](std::size_t, std::string&) {
      auto q = fixtures::random_quotient(groups, 12, rng);
      if (!q) return Outcome::Inconclusive;
      structure_functions(*q->group, q->quotient);
      return Outcome::Pass;
    });
    if (options.corrupt_quotient) {
      SuiteResult bad = run_suite("structure-functions", 1, [&](std::size_t, std::string&) {
        const GroupPtr& f2 = groups[0];
        // s(1) = b maps to 0, not 1.
        FiniteQuotient broken = FiniteQuotient::unchecked(
            *f2, {{0, 1}, {1, 0}}, {1, 0}, {Word{}, Word{Letter{1, false}}});
        structure_functions(*f2, broken);
        return Outcome::Pass;
      });
      r.passed += bad.passed;
      r.failed += bad.failed;
      if (bad.failed > 0) r.counterexample = "corrupted quotient: " + bad.counterexample;
    }
    results.push_back(std::move(r));
  }

  results.push_back(run_suite("s-isomorphism", n, [&](std::size_t, std::string& why) {
    auto q = fixtures::random_quotient(groups, 8, rng);
    if (!q) return Outcome::Inconclusive;
    StructureFunctions sf = structure_functions(*q->group, q->quotient);
    RingElement x = fixtures::random_ring_element(q->group, 4, 4, rng);
    RingElement y = fixtures::random_ring_element(q->group, 4, 4, rng);
    RingElement lhs = reassemble(twisted_multiply(split_by_cosets(x, q->quotient),
                                                  split_by_cosets(y, q->quotient), sf));
    if (lhs == x * y) return Outcome::Pass;
    why = "reassemble(split(x) * split(y)) != x y for x = " + x.to_string();
    return Outcome::Fail;
  }));

  results.push_back(run_suite("valuation-laws", n, [&](std::size_t, std::string& why) {
    const GroupPtr& g = groups[rng() % groups.size()];
    Character phi = fixtures::random_character(g->abelianization().rank, rng, true);
    RingElement x = fixtures::random_ring_element(g, 4, 4, rng);
    RingElement y = fixtures::random_ring_element(g, 4, 4, rng);
    ExtendedValue vx = valuation(x, phi), vy = valuation(y, phi);
    if (valuation(x + y, phi) < min(vx, vy)) why = "v(x + y) < min(v(x), v(y))";
    else if (!(valuation(x * y, phi) == vx + vy)) why = "v(xy) != v(x) + v(y)";
    else if (!(valuation(-x, phi) == vx)) why = "v(-x) != v(x)";
    else return Outcome::Pass;
    why += " at x = " + x.to_string() + ", y = " + y.to_string();
    return Outcome::Fail;
  }));

  results.push_back(run_suite("ineq-1-6", n, [&](std::size_t, std::string& why) {
    SubgroupFixture f = random_subgroup_fixture(groups, 8, rng);
    const FiniteQuotient& quotient = f.base.quotient;
    const GroupPtr& g = f.base.group;
    Character psi = fixtures::random_character(f.subgroup->abelianization().rank, rng, rng() % 2 == 0);
    QValuation qv(psi, quotient, *f.subgroup);
    RealValue defect = qv.qdefect();
    RingElement x = in_ambient(fixtures::random_subgroup_element(f.subgroup, 3, 3, rng), g);
    RingElement y = in_ambient(fixtures::random_subgroup_element(f.subgroup, 3, 3, rng), g);
    std::size_t q = rng() % quotient.order();
    CosetSplitElement z = random_split(f, rng), w = random_split(f, rng);
    auto at = [&](const RingElement& e, std::size_t p) {
      CosetSplitElement s(g, quotient);
      s.part(p) = e;
      return s;
    };
    ExtendedValue qx = qv.qvalue(x), qy = qv.qvalue(y);
    if (!(qv.qvalue(x.conjugate(quotient.section(q))) == qx)) why = "(1) qval(x^(q^-1)) != qval(x)";
    else if (!(qv.qvalue(at(x, q)) == qx + ExtendedValue(qv.qvalue_of(q))))
      why = "(2) qval(x q) != qval(q) + qval(x)";
    else if (!(qv.qvalue(split_product(CosetSplitElement::basis(g, quotient, q), at(x, 0))) ==
               qx + ExtendedValue(qv.qvalue_of(q))))
      why = "(2) qval(q . x) != qval(q) + qval(x)";
    else if (qv.qvalue(x * y) < qx + qy) why = "(3) qval(xy) < qval(x) + qval(y)";
    else if (qv.qvalue(x + y) < min(qx, qy)) why = "(4) qval(x + y) < min";
    else if (qv.qvalue(z + w) < min(qv.qvalue(z), qv.qvalue(w))) why = "(5) qval(z + w) < min";
    else if (qv.qvalue(split_product(z, w)) < qv.qvalue(z) + qv.qvalue(w) + ExtendedValue(-defect))
      why = "(6) qval(zw) < qval(z) + qval(w) - |psi|_Q";
    else return Outcome::Pass;
    return Outcome::Fail;
  }));

  results.push_back(run_suite("qval-for-phi", n, [&](std::size_t, std::string& why) {
    SubgroupFixture f = random_subgroup_fixture(groups, 8, rng);
    Character phi = fixtures::random_character(f.base.group->abelianization().rank, rng, true);
    Character psi = restrict_character(phi, *f.base.group, *f.subgroup);
    QValuation qv(psi, f.base.quotient, *f.subgroup);
    CosetSplitElement z = random_split(f, rng);
    if (!qv.qdefect().is_zero()) why = "|phi|_Q != 0";
    else if (!(qv.qvalue(z) == valuation(reassemble(z), phi))) why = "qval(z) != phi(s(z))";
    else return Outcome::Pass;
    return Outcome::Fail;
  }));

  results.push_back(run_suite("fox-identity", n, [&](std::size_t i, std::string& why) {
    const GroupPtr& g = groups[i % groups.size()];
    Word w = fixtures::random_word(g->generator_count(), 8, rng);
    RingElement sum(g);
    for (std::uint32_t j = 0; j < g->generator_count(); ++j) {
      sum += fox_derivative(w, j, g) * (RingElement::from_generator_word(g, Word{Letter{j, false}}) -
                                        RingElement::one(g));
    }
    if (sum == RingElement::from_generator_word(g, w) - RingElement::one(g)) return Outcome::Pass;
    why = "Fox identity fails for " + format_word(w, g->presentation().generators);
    return Outcome::Fail;
  }));

  results.push_back(run_suite("novikov-inversion", n, [&](std::size_t, std::string& why) {
    const GroupPtr& g = groups[1 + rng() % 2];  // Z^2, Z^3
    auto phi = std::make_shared<const Character>(
        fixtures::random_character(g->abelianization().rank, rng, true));
    // x = c h (1 - y) with every support element of y of positive value.
    RingElement y(g);
    for (int attempt = 0; attempt < 50 && y.is_zero(); ++attempt) {
      RingElement r = fixtures::random_ring_element(g, 3, 3, rng);
      for (const auto& [key, c] : r.terms()) {
        if (sign(evaluate(*phi, *g, key)) > 0) y.add_term(key, c);
      }
    }
    if (y.is_zero()) return Outcome::Inconclusive;
    Word h = g->embed(fixtures::random_word(g->generator_count(), 3, rng));
    RingElement x = (RingElement::one(g) - y).left_translate(h) * Rational(2);
    RealValue vx = evaluate(*phi, *g, h);
    RealValue gap = valuation(y, *phi).value();
    ExtendedValue target = options.cutoff ? ExtendedValue(*options.cutoff)
                                          : ExtendedValue(gap * Rational(20) - vx);
    // The product is known modulo target + phi(x); below one gap past the
    // leading monomial it carries no information.
    if (!(gap < target.value() + vx)) return Outcome::Inconclusive;
    NovikovElement nx(x, phi);
    NovikovElement z = invert(nx, target);
    NovikovElement one = NovikovElement::one(g, phi);
    if (!(nx * z).congruent(one) || !(z * nx).congruent(one)) {
      why = "x invert(x) != 1 for x = " + x.to_string();
      return Outcome::Fail;
    }
    return Outcome::Pass;
  }));

  results.push_back(run_suite("key-lemma", n, [&](std::size_t i, std::string& why) {
    SubgroupFixture f = random_subgroup_fixture(groups, 6, rng);
    const GroupPtr& g = f.base.group;
    const FiniteQuotient& quotient = f.base.quotient;
    Character phi = fixtures::random_character(g->abelianization().rank, rng, true);
    Character psi = restrict_character(phi, *g, *f.subgroup);
    if (psi.is_zero()) return Outcome::Inconclusive;
    QValuation qv(psi, quotient, *f.subgroup);
    // An element of H of positive value for every conjugate: a product
    // over a full set of conjugates of some h with nonzero norm.
    Word h;
    RealValue norm;
    for (int attempt = 0; attempt < 20 && norm.is_zero(); ++attempt) {
      Word candidate = f.subgroup->embed(fixtures::random_word(f.subgroup->generator_count(), 2, rng));
      Word product;
      for (std::size_t p = 0; p < quotient.order(); ++p) {
        product = g->multiply(product, g->conjugate(g->invert(quotient.section(p)), candidate));
      }
      norm = qv.qvalue(RingElement::monomial(g, product)).value();
      h = sign(norm) < 0 ? g->invert(product) : product;
      norm = abs(norm);
    }
    if (norm.is_zero()) return Outcome::Inconclusive;
    // x = 3 s(q) is a unit of QG.
    std::size_t q = rng() % quotient.order();
    CosetSplitElement x(g, quotient);
    x.part(q) = RingElement::monomial(g, {}, 3);
    CosetSplitElement xi = split_by_cosets(
        RingElement::monomial(g, g->invert(quotient.section(q)), Rational(1, 3)), quotient);
    CosetSplitElement y(g, quotient);
    y.part(rng() % quotient.order()) =
        in_ambient(fixtures::random_subgroup_element(f.subgroup, 2, 2, rng), g);
    if (y.is_zero()) return Outcome::Inconclusive;
    bool violate = i % 3 == 2;
    Word shift = violate ? g->invert(h) : h;
    auto satisfied = [&] {
      RealValue margin =
          qv.qvalue(y).value() + qv.qvalue(xi).value() - qv.qdefect() * Rational(2);
      // A margin of at least |h| keeps the number of series terms small.
      return violate ? sign(margin) <= 0 : margin > norm;
    };
    for (int k = 0; k < 64 && !satisfied(); ++k) {
      for (std::size_t p = 0; p < quotient.order(); ++p) y.part(p) = y.part(p).left_translate(shift);
    }
    if (!satisfied()) return Outcome::Inconclusive;
    RealValue cutoff = options.cutoff ? *options.cutoff : norm * Rational(4);
    try {
      InvertSumResult r = invert_sum(x, y, qv, cutoff);
      if (violate) {
        why = "hypothesis violation not detected";
        return Outcome::Fail;
      }
      if (r.left_residual < ExtendedValue(cutoff) || r.right_residual < ExtendedValue(cutoff)) {
        why = "residual below cutoff";
        return Outcome::Fail;
      }
      return Outcome::Pass;
    } catch (const HypothesisViolation&) {
      if (violate) return Outcome::Pass;
      throw;
    } catch (const InconclusiveAtCutoff&) {
      return Outcome::Inconclusive;
    }
  }));

  {
    std::vector<std::pair<GroupPtr, Character>> cases;
    for (const auto& entry : builtin_catalog()) {
      GroupPtr g = make_group(parse_presentation(entry.presentation));
      for (const Character& phi : sample_primitive_rays(g->abelianization().rank, 2, options.seed)) {
        cases.emplace_back(g, phi);
      }
    }
    results.push_back(run_suite("certificates", cases.size(), [&](std::size_t i, std::string& why) {
      const auto& [g, phi] = cases[i];
      ChainComplex complex = build_complex(g);
      CutoffPolicy policy;
      if (options.cutoff) {
        policy.cutoff = *options.cutoff;
        policy.retries = 0;
      }
      CertificationResult r = certify(complex, phi, policy);
      if (r.status == DirectionStatus::InconclusiveAtCutoff) return Outcome::Inconclusive;
      if (r.status == DirectionStatus::RefutedByRank) return Outcome::Pass;
      VerificationReport v = verify_certificate(*r.certificate, complex);
      if (!v.ok) {
        why = "certificate fails verification: " + v.failure;
        return Outcome::Fail;
      }
      CutoffPolicy doubled{r.cutoff * Rational(2), 0};
      if (certify(complex, phi, doubled).status != DirectionStatus::Certified) {
        why = "certificate lost at doubled cutoff";
        return Outcome::Fail;
      }
      return Outcome::Pass;
    }));
  }
  return results;
}

}  // namespace novikov
