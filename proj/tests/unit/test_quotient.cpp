#include <doctest.h>

#include "helpers.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/quotient.hpp"

using namespace novikov;

TEST_CASE("coset decomposition over Z -> Z/2") {
  GroupPtr z = test::group(test::kZ);
  FiniteQuotient q = FiniteQuotient::create(*z, fixtures::cyclic_group(2).table, {1},
                                            std::vector<Word>{{}, test::word(z, "t")});
  CosetDecomposition d = coset_decompose(*z, test::key(z, "t^3"), q);
  CHECK(z->format(d.h) == "t^2");
  CHECK(d.cls == 1);
  d = coset_decompose(*z, {}, q);
  CHECK(d.h.empty());
  CHECK(d.cls == 0);
  d = coset_decompose(*z, q.section(1), q);
  CHECK(d.h.empty());
  CHECK(d.cls == 1);
}

TEST_CASE("default section is shortlex minimal") {
  GroupPtr g = test::group(test::kZ2);
  FiniteQuotient q = FiniteQuotient::create(*g, fixtures::cyclic_group(3).table, {1, 2});
  CHECK(g->format(q.section(0)) == "1");
  CHECK(g->format(q.section(1)) == "a");
  CHECK(g->format(q.section(2)) == "a^-1");  // a^-1 precedes b
}

TEST_CASE("decomposition recombines") {
  std::mt19937_64 rng(3);
  auto groups = fixtures::raag_catalog();
  for (int i = 0; i < 50; ++i) {
    auto f = fixtures::random_quotient(groups, 12, rng);
    REQUIRE(f);
    const Group& g = *f->group;
    Word x = g.embed(fixtures::random_word(g.generator_count(), 8, rng));
    CosetDecomposition d = coset_decompose(g, x, f->quotient);
    CHECK(f->quotient.image_of(g, d.h) == 0);
    CHECK(g.multiply(d.h, f->quotient.section(d.cls)) == x);
  }
}

TEST_CASE("invalid tables and maps are rejected") {
  CHECK_THROWS_AS(validate_group_table({{0, 1}, {1, 1}}), QuotientError);
  CHECK_THROWS_AS(validate_group_table({{1, 0}, {0, 1}}), QuotientError);
  CHECK_NOTHROW(validate_group_table(fixtures::small_groups(8).back().table));

  GroupPtr f2 = test::group(test::kF2);
  auto z2 = fixtures::cyclic_group(2).table;
  CHECK_THROWS_AS(FiniteQuotient::create(*f2, z2, {0, 0}), QuotientError);  // not onto
  CHECK_THROWS_AS(FiniteQuotient::create(*f2, z2, {1, 2}), QuotientError);  // out of range

  GroupPtr bs = test::group(test::kBS12);
  CHECK_THROWS_AS(FiniteQuotient::create(*bs, z2, {1, 0}), QuotientError);  // relator image 1

  CHECK_THROWS_AS(FiniteQuotient::create(*f2, z2, {1, 0}, std::vector<Word>{{}, test::word(f2, "b")}),
                  QuotientError);  // s(1) lands in the wrong coset
  CHECK_THROWS_AS(FiniteQuotient::create(*f2, z2, {1, 0}, std::vector<Word>{test::word(f2, "b"), test::word(f2, "a")}),
                  QuotientError);  // s(1) != 1
}

TEST_CASE("small group fixtures are groups of the stated order") {
  std::map<std::string, std::size_t> orders = {{"Q8", 8}, {"A4", 12}, {"S3", 6}, {"D4", 8}};
  for (const auto& g : fixtures::small_groups(12)) {
    CHECK_NOTHROW(validate_group_table(g.table));
    if (orders.count(g.name)) CHECK(g.table.size() == orders[g.name]);
  }
}
