#include <doctest.h>

#include "helpers.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/subgroup.hpp"

using namespace novikov;

TEST_CASE("kernel of Z -> Z/2 is generated by t^2") {
  GroupPtr z = test::group(test::kZ);
  FiniteQuotient q = FiniteQuotient::create(*z, fixtures::cyclic_group(2).table, {1});
  SubgroupPresentation sp = subgroup_presentation(*z, q);
  CHECK(sp.schreier_generator_count == 2);
  REQUIRE(sp.presentation.generator_count() == 1);
  CHECK(sp.presentation.relators.empty());
  CHECK(z->format(z->embed(sp.inclusion[0])) == "t^2");
  GroupPtr h = make_subgroup(z, q);
  CHECK(h->abelianization().rank == 1);
  CHECK(h->format(h->generator(0)) == "t^2");
}

TEST_CASE("trivial quotient returns the presentation") {
  GroupPtr g = test::group(test::kF2xZ);
  FiniteQuotient q = FiniteQuotient::create(*g, {{0}}, {0, 0, 0});
  SubgroupPresentation sp = subgroup_presentation(*g, q);
  CHECK(sp.presentation.relators == g->presentation().relators);
  CHECK(sp.presentation.generator_count() == 3);
}

TEST_CASE("kernel of F2 -> Z/2 is free of rank 3") {
  GroupPtr f2 = test::group(test::kF2);
  FiniteQuotient q = FiniteQuotient::create(*f2, fixtures::cyclic_group(2).table, {1, 0});
  GroupPtr h = make_subgroup(f2, q);
  CHECK(h->generator_count() == 3);
  CHECK(h->presentation().relators.empty());
  CHECK(h->abelianization().rank == 3);
  CHECK(h->presentation().generators[0].rfind("H_", 0) == 0);
}

TEST_CASE("Schreier index formula on random quotients of F2") {
  std::mt19937_64 rng(17);
  GroupPtr f2 = test::group(test::kF2);
  for (int i = 0; i < 30; ++i) {
    auto f = fixtures::random_quotient({f2}, 12, rng);
    REQUIRE(f);
    GroupPtr h = make_subgroup(f2, f->quotient);
    CHECK(h->abelianization().rank == f->quotient.order() + 1);
  }
}

TEST_CASE("subgroup words round trip through the ambient group") {
  std::mt19937_64 rng(19);
  auto groups = fixtures::raag_catalog();
  for (int i = 0; i < 40; ++i) {
    auto f = fixtures::random_quotient(groups, 8, rng);
    REQUIRE(f);
    GroupPtr h = make_subgroup(f->group, f->quotient);
    for (int j = 0; j < 5; ++j) {
      Word x = h->embed(fixtures::random_word(h->generator_count(), 4, rng));
      CHECK(f->quotient.image_of(*f->group, x) == 0);
      CHECK(h->embed(h->generator_word(x)) == x);
    }
    // Every relator of H is trivial in G.
    for (const Word& r : h->presentation().relators) CHECK(h->embed(r).empty());
  }
}

TEST_CASE("elements outside the kernel are rejected") {
  GroupPtr f2 = test::group(test::kF2);
  FiniteQuotient q = FiniteQuotient::create(*f2, fixtures::cyclic_group(2).table, {1, 0});
  GroupPtr h = make_subgroup(f2, q);
  CHECK_THROWS_AS(h->generator_word(test::key(f2, "a")), QuotientError);
  CHECK_NOTHROW(h->generator_word(test::key(f2, "a b a")));
}

TEST_CASE("quotients above the order bound are refused") {
  GroupPtr z = test::group(test::kZ);
  FiniteQuotient q = FiniteQuotient::create(*z, fixtures::cyclic_group(5).table, {1});
  CHECK_THROWS_AS(subgroup_presentation(*z, q, 4), QuotientError);
}
