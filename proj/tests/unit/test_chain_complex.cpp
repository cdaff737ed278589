#include <doctest.h>

#include "helpers.hpp"
#include "novikov/catalog.hpp"
#include "novikov/chain_complex.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"

using namespace novikov;

TEST_CASE("Fox derivatives of short words") {
  GroupPtr g = test::group(test::kF2);
  CHECK(fox_derivative(test::word(g, "a b"), 0, g) == RingElement::one(g));
  CHECK(fox_derivative(test::word(g, "a^-1"), 0, g) == test::element(g, {{"a^-1", -1}}));
  CHECK(fox_derivative(test::word(g, "a b a^-1 b^-1"), 1, g) ==
        test::element(g, {{"a", 1}, {"a b a^-1 b^-1", -1}}));
  CHECK(fox_derivative(test::word(g, "a b a^-1 b^-1"), 0, g) ==
        test::element(g, {{"1", 1}, {"a b a^-1", -1}}));
  CHECK(fox_derivative(test::word(g, "b^3"), 1, g) == test::element(g, {{"1", 1}, {"b", 1}, {"b^2", 1}}));
}

TEST_CASE("the fundamental identity") {
  std::mt19937_64 rng(61);
  auto groups = fixtures::raag_catalog();
  groups.push_back(test::group(test::kBS12));
  for (int i = 0; i < 300; ++i) {
    const GroupPtr& g = groups[i % groups.size()];
    Word w = fixtures::random_word(g->generator_count(), 8, rng);
    RingElement sum(g);
    for (std::uint32_t j = 0; j < g->generator_count(); ++j) {
      sum += fox_derivative(w, j, g) *
             (RingElement::monomial(g, g->generator(j)) - RingElement::one(g));
    }
    CHECK(sum == RingElement::from_generator_word(g, w) - RingElement::one(g));
  }
}

TEST_CASE("differentials of small presentations") {
  GroupPtr f2 = test::group(test::kF2);
  ChainComplex c = build_complex(f2);
  CHECK(c.d2.empty());
  CHECK(c.d1[0] == test::element(f2, {{"a", 1}, {"1", -1}}));
  CHECK(c.d1[1] == test::element(f2, {{"b", 1}, {"1", -1}}));

  GroupPtr z2 = test::group(test::kZ2);
  c = build_complex(z2);
  REQUIRE(c.d2.size() == 1);
  CHECK(c.d2[0][0] == test::element(z2, {{"1", 1}, {"a b a^-1", -1}}));
  CHECK(c.d2[0][1] == test::element(z2, {{"a", 1}, {"a b a^-1 b^-1", -1}}));

  GroupPtr bs = test::group(test::kBS12);
  c = build_complex(bs);
  REQUIRE(c.d2.size() == 1);
  CHECK(c.d2[0][0] ==
        test::element(bs, {{"t", 1}, {"t a t^-1 a^-1", -1}, {"t a t^-1 a^-2", -1}}));
  CHECK(c.d2[0][1] == test::element(bs, {{"1", 1}, {"t a t^-1", -1}}));
}

TEST_CASE("d1 d2 vanishes on the catalog") {
  for (const CatalogEntry& entry : builtin_catalog()) {
    ChainComplex c = build_complex(make_group(parse_presentation(entry.presentation)));
    for (const RingElement& row : boundary_composite(c)) CHECK(row.is_zero());
  }
}

TEST_CASE("pivot choice") {
  ChainComplex c = build_complex(test::group(test::kF2xZ));
  CHECK(choose_pivot(c, Character::rational({1, -3, 2})) == 1);
  CHECK(choose_pivot(c, Character::rational({2, -2, 1})) == 0);
  CHECK_THROWS_AS(choose_pivot(c, Character::rational({0, 0, 0})), ZeroCharacter);
}

TEST_CASE("cycle bases") {
  GroupPtr z = test::group(test::kZ);
  auto one = std::make_shared<const Character>(Character::rational({1}));
  CycleBasis basis = cycle_basis(build_complex(z), one, ExtendedValue(8));
  CHECK(basis.vectors.empty());

  GroupPtr f2 = test::group(test::kF2);
  auto phi = std::make_shared<const Character>(Character({RealValue(1), RealValue::sqrt_term(2, Rational(1, 2))}));
  ChainComplex c = build_complex(f2);
  basis = cycle_basis(c, phi, ExtendedValue(6));
  CHECK(basis.pivot == 0);
  REQUIRE(basis.vectors.size() == 1);
  CHECK(basis.coordinates == std::vector<std::uint32_t>{1});
  CHECK(boundary_of_chain(c, basis.vectors[0]).is_zero());
  CHECK(basis.vectors[0][1].body() == RingElement::one(f2));

  // Negative pivot value: the series runs in a^-1.
  auto neg = std::make_shared<const Character>(Character::rational({-1, 0}));
  basis = cycle_basis(c, neg, ExtendedValue(6));
  CHECK(basis.pivot_sign == -1);
  CHECK(boundary_of_chain(c, basis.vectors[0]).is_zero());
}
