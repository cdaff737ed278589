#include <doctest.h>

#include "helpers.hpp"
#include "novikov/character.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/subgroup.hpp"

using namespace novikov;

namespace {
Character one_root2() { return Character({RealValue(1), RealValue::sqrt_term(2)}); }
}  // namespace

TEST_CASE("evaluation on Z^2") {
  GroupPtr g = test::group(test::kZ2);
  Character phi = one_root2();
  CHECK(evaluate(phi, *g, test::key(g, "a")) == RealValue(1));
  CHECK(evaluate(phi, *g, {}).is_zero());
  CHECK(evaluate(phi, *g, test::key(g, "a^-1 b")) == RealValue::sqrt_term(2) - RealValue(1));
  CHECK_THROWS_AS(phi.evaluate({1, 2, 3}), RankMismatch);
}

TEST_CASE("irrationality is injectivity on Z^r") {
  CHECK(is_irrational(one_root2(), 2));
  CHECK_FALSE(is_irrational(Character::rational({1, 1}), 2));
  CHECK_FALSE(is_irrational(Character::rational({2, 3}), 2));
  CHECK(is_irrational(Character::rational({5}), 1));
  Character dependent({RealValue::sqrt_term(2), RealValue::sqrt_term(2) * Rational(3)});
  CHECK_FALSE(is_irrational(dependent, 2));
}

TEST_CASE("compatible order") {
  GroupPtr g = test::group(test::kZ2);
  CompatibleOrder order(*g, one_root2());
  CHECK(order.compare(test::key(g, "a"), test::key(g, "b")) == std::weak_ordering::less);
  CHECK(order.compare(test::key(g, "a b"), test::key(g, "b a")) == std::weak_ordering::equivalent);
  CompatibleOrder flat(*g, Character::rational({0, 0}));
  CHECK(flat.compare_abelian({1, 0}, {0, 1}) == std::weak_ordering::less);
  CHECK(flat.compare_abelian({0, 1}, {1, 0}) == std::weak_ordering::greater);
}

TEST_CASE("compatible order is translation invariant") {
  std::mt19937_64 rng(29);
  GroupPtr g = test::group(test::kF2xZ);
  CompatibleOrder order(*g, fixtures::random_character(3, rng, false));
  for (int i = 0; i < 200; ++i) {
    Word x = g->embed(fixtures::random_word(3, 5, rng));
    Word y = g->embed(fixtures::random_word(3, 5, rng));
    Word t = g->embed(fixtures::random_word(3, 5, rng));
    CHECK(order.compare(x, y) == order.compare(g->multiply(t, x), g->multiply(t, y)));
    CHECK(order.compare(x, y) == order.compare(g->multiply(x, t), g->multiply(y, t)));
  }
}

TEST_CASE("restricted characters agree with the ambient character") {
  std::mt19937_64 rng(31);
  auto groups = fixtures::raag_catalog();
  for (int i = 0; i < 30; ++i) {
    auto f = fixtures::random_quotient(groups, 8, rng);
    REQUIRE(f);
    GroupPtr h = make_subgroup(f->group, f->quotient);
    Character phi = fixtures::random_character(f->group->abelianization().rank, rng, true);
    Character psi = restrict_character(phi, *f->group, *h);
    for (int j = 0; j < 5; ++j) {
      Word x = h->embed(fixtures::random_word(h->generator_count(), 4, rng));
      CHECK(evaluate(psi, *h, x) == evaluate(phi, *f->group, x));
    }
    for (std::size_t q = 0; q < f->quotient.order(); ++q) {
      CHECK(conjugate_character(psi, q, f->quotient, *h) == psi);
    }
  }
}

TEST_CASE("conjugate characters by direct conjugation") {
  std::mt19937_64 rng(37);
  GroupPtr f2 = test::group(test::kF2);
  FiniteQuotient q = FiniteQuotient::create(*f2, fixtures::cyclic_group(2).table, {1, 0});
  GroupPtr h = make_subgroup(f2, q);
  REQUIRE(h->abelianization().rank == 3);
  for (int i = 0; i < 10; ++i) {
    Character psi = fixtures::random_character(3, rng, rng() % 2 == 0);
    CHECK(conjugate_character(psi, 0, q, *h) == psi);
    Character psi1 = conjugate_character(psi, 1, q, *h);
    for (int j = 0; j < 10; ++j) {
      Word x = h->embed(fixtures::random_word(3, 5, rng));
      Word conj = f2->conjugate(q.section(1), x);
      CHECK(evaluate(psi1, *h, x) == evaluate(psi, *h, conj));
    }
  }
}
