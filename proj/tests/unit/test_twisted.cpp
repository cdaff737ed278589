#include <doctest.h>

#include "helpers.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/twisted.hpp"

using namespace novikov;

namespace {
struct ZOverZ2 {
  GroupPtr z = test::group(test::kZ);
  FiniteQuotient q = FiniteQuotient::create(*z, fixtures::cyclic_group(2).table, {1},
                                            std::vector<Word>{{}, test::word(z, "t")});
};
}  // namespace

TEST_CASE("structure functions of Z -> Z/2") {
  ZOverZ2 f;
  StructureFunctions sf = structure_functions(*f.z, f.q);
  CHECK(f.z->format(sf.mu[1][1]) == "t^2");
  CHECK(sf.mu[0][1].empty());
  CHECK(sf.mu[1][0].empty());
  CHECK(sf.nu[0].empty());
}

TEST_CASE("mu is trivial on the identity and nu acts trivially for abelian groups") {
  std::mt19937_64 rng(43);
  GroupPtr z2 = test::group(test::kZ2);
  for (int i = 0; i < 20; ++i) {
    auto f = fixtures::random_quotient({z2}, 12, rng);
    REQUIRE(f);
    StructureFunctions sf = structure_functions(*z2, f->quotient);
    for (std::size_t q = 0; q < f->quotient.order(); ++q) {
      CHECK(sf.mu[0][q].empty());
      CHECK(sf.mu[q][0].empty());
      Word h = z2->embed(fixtures::random_word(2, 4, rng));
      CHECK(z2->conjugate(sf.nu[q], h) == h);
    }
  }
}

TEST_CASE("coset split of 1 + t + t^2") {
  ZOverZ2 f;
  RingElement x = test::element(f.z, {{"1", 1}, {"t", 1}, {"t^2", 1}});
  CosetSplitElement s = split_by_cosets(x, f.q);
  CHECK(s.part(0) == test::element(f.z, {{"1", 1}, {"t^2", 1}}));
  CHECK(s.part(1) == RingElement::one(f.z));
  CHECK(reassemble(s) == x);
  CosetSplitElement h = split_by_cosets(test::element(f.z, {{"t^4", 3}}), f.q);
  CHECK(h.part(1).is_zero());
}

TEST_CASE("twisted multiplication matches the group ring") {
  std::mt19937_64 rng(47);
  auto groups = fixtures::raag_catalog();
  for (int i = 0; i < 40; ++i) {
    auto f = fixtures::random_quotient(groups, 12, rng);
    REQUIRE(f);
    StructureFunctions sf = structure_functions(*f->group, f->quotient);
    RingElement x = fixtures::random_ring_element(f->group, 4, 4, rng);
    RingElement y = fixtures::random_ring_element(f->group, 4, 4, rng);
    CosetSplitElement sx = split_by_cosets(x, f->quotient);
    CHECK(reassemble(sx) == x);
    CHECK(reassemble(twisted_multiply(sx, split_by_cosets(y, f->quotient), sf)) == x * y);
  }
}

TEST_CASE("a section in the wrong coset is caught") {
  GroupPtr f2 = test::group(test::kF2);
  FiniteQuotient bad = FiniteQuotient::unchecked(*f2, fixtures::cyclic_group(2).table, {1, 0},
                                                 {Word{}, test::word(f2, "b")});
  CHECK_THROWS_AS(structure_functions(*f2, bad), QuotientError);
}
