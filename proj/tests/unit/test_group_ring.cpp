#include <doctest.h>

#include "helpers.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/group_ring.hpp"

using namespace novikov;

TEST_CASE("monomial products") {
  GroupPtr g = test::group(test::kF2);
  RingElement x = RingElement::monomial(g, test::key(g, "a"), 2);
  RingElement y = RingElement::monomial(g, test::key(g, "b"), 3);
  CHECK(x * y == RingElement::monomial(g, test::key(g, "a b"), 6));
  CHECK(x * RingElement::one(g) == x);
  CHECK((x * RingElement::zero(g)).is_zero());
}

TEST_CASE("four-term expansion in QF2") {
  GroupPtr g = test::group(test::kF2);
  RingElement p = test::element(g, {{"a", 1}, {"b", 1}});
  RingElement m = test::element(g, {{"a", 1}, {"b", -1}});
  RingElement expected = test::element(g, {{"a^2", 1}, {"b a", 1}, {"a b", -1}, {"b^2", -1}});
  CHECK(p * m == expected);
  CHECK((p * m).to_string() == "a^2 - a b + b a - b^2");
}

TEST_CASE("commutative group rings collapse terms") {
  GroupPtr g = test::group(test::kZ2);
  RingElement p = test::element(g, {{"a", 1}, {"b", 1}});
  RingElement m = test::element(g, {{"a", 1}, {"b", -1}});
  CHECK(p * m == test::element(g, {{"a^2", 1}, {"b^2", -1}}));
}

TEST_CASE("printing") {
  GroupPtr g = test::group(test::kF2);
  RingElement x = test::element(g, {{"a b", 2}, {"1", -1}});
  CHECK(x.to_string() == "-1 + 2*a b");
  CHECK(RingElement::zero(g).to_string() == "0");
  x *= Rational(1, 2);
  CHECK(x.to_string() == "-1/2 + a b");
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(41);
  auto groups = fixtures::raag_catalog();
  for (int i = 0; i < 100; ++i) {
    const GroupPtr& g = groups[i % groups.size()];
    RingElement x = fixtures::random_ring_element(g, 4, 4, rng);
    RingElement y = fixtures::random_ring_element(g, 4, 4, rng);
    RingElement z = fixtures::random_ring_element(g, 4, 4, rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    Word h = g->embed(fixtures::random_word(g->generator_count(), 3, rng));
    CHECK(x.left_translate(h) == RingElement::monomial(g, h) * x);
    CHECK(x.right_translate(h) == x * RingElement::monomial(g, h));
    CHECK(x.conjugate(h) == RingElement::monomial(g, h) * x * RingElement::monomial(g, g->invert(h)));
  }
}

TEST_CASE("valuation") {
  GroupPtr g = test::group(test::kZ2);
  Character phi({RealValue(1), RealValue::sqrt_term(2)});
  CHECK(valuation(RingElement::zero(g), phi).is_infinite());
  RingElement x = test::element(g, {{"a", 2}, {"b", 3}});
  CHECK(valuation(x, phi) == ExtendedValue(1));
}

TEST_CASE("leading terms") {
  GroupPtr g = test::group(test::kZ2);
  RingElement x = test::element(g, {{"a", 2}, {"b", 3}});
  LeadingTerm lt = leading_term(x, CompatibleOrder(*g, Character({RealValue(1), RealValue::sqrt_term(2)})));
  CHECK(g->format(lt.key) == "a");
  CHECK(lt.coefficient == 2);
  CHECK(lt.strict);
  lt = leading_term(x, CompatibleOrder(*g, Character::rational({0, 0})));
  CHECK(g->format(lt.key) == "a");
  CHECK_FALSE(lt.strict);
  RingElement single = test::element(g, {{"a b^-1", 5}});
  lt = leading_term(single, CompatibleOrder(*g, Character::rational({1, 1})));
  CHECK(g->format(lt.key) == "a b^-1");
  CHECK(lt.strict);
  CHECK_THROWS_AS(leading_term(RingElement::zero(g), CompatibleOrder(*g, Character::rational({1, 1}))),
                  std::invalid_argument);
}
