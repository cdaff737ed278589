#include <doctest.h>

#include "helpers.hpp"
#include "novikov/catalog.hpp"

using namespace novikov;

TEST_CASE("living subgraph criterion") {
  RaagGraph path{{{0, 2}, {1, 2}}};  // a - z - b
  CHECK(raag_living_subgraph_criterion(3, path, {0, 0, 1}));
  CHECK(raag_living_subgraph_criterion(3, path, {1, 1, 1}));
  CHECK(raag_living_subgraph_criterion(3, path, {1, 0, -1}));
  CHECK_FALSE(raag_living_subgraph_criterion(3, path, {1, 0, 0}));  // b is not adjacent to a
  CHECK_FALSE(raag_living_subgraph_criterion(3, path, {1, 1, 0}));  // a, b disconnected
  RaagGraph empty;
  CHECK_FALSE(raag_living_subgraph_criterion(2, empty, {1, 1}));
  CHECK(raag_living_subgraph_criterion(1, empty, {1}));
  RaagGraph edge{{{0, 1}}};
  CHECK(raag_living_subgraph_criterion(2, edge, {1, 0}));
}

TEST_CASE("oracles on known groups") {
  GroupPtr f2 = test::group(test::kF2);
  CHECK(sigma_oracle(SigmaOracleKind::FreeGroup, f2, Character::rational({1, 0})) == false);
  GroupPtr z2 = test::group(test::kZ2);
  CHECK(sigma_oracle(SigmaOracleKind::FreeAbelian, z2, Character::rational({3, -1})) == true);
  GroupPtr bs = test::group(test::kBS12);
  CHECK(sigma_oracle(SigmaOracleKind::BaumslagSolitar12, bs, Character::rational({-1})) == true);
  CHECK(sigma_oracle(SigmaOracleKind::BaumslagSolitar12, bs, Character::rational({1})) == false);
  CHECK_FALSE(sigma_oracle(SigmaOracleKind::None, z2, Character::rational({1, 0})).has_value());
}

TEST_CASE("catalog entries parse and carry oracles") {
  for (const CatalogEntry& e : builtin_catalog()) {
    CAPTURE(e.name);
    GroupPtr g = make_group(parse_presentation(e.presentation));
    CHECK(e.oracle != SigmaOracleKind::None);
    CHECK_FALSE(e.provenance.empty());
    CHECK(g->abelianization().rank >= 1);
  }
  CHECK(catalog_entry("F2").known_betti1 == 1);
  CHECK_FALSE(catalog_entry("BS12").rfrs);
  CHECK_THROWS_AS(catalog_entry("nope"), std::invalid_argument);
}

TEST_CASE("consistency harness passes on every entry") {
  for (const CatalogEntry& e : builtin_catalog()) {
    HarnessReport r = consistency_harness(e, 6);
    CAPTURE(r.summary);
    CHECK(r.pass);
    CHECK(r.conflicts == 0);
    if (e.known_betti1 == 0 && e.rfrs) CHECK(r.fibred_count > 0);
    if (e.known_betti1 != 0) CHECK(r.fibred_count == 0);
  }
}

TEST_CASE("harness requires an oracle") {
  CatalogEntry e = catalog_entry("Z2");
  e.oracle = SigmaOracleKind::None;
  CHECK_THROWS_AS(consistency_harness(e, 2), std::invalid_argument);
}
