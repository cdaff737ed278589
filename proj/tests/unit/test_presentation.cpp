#include <doctest.h>

#include "helpers.hpp"
#include "novikov/error.hpp"

using namespace novikov;

TEST_CASE("raag syntax gives commutator relators") {
  GroupPresentation p = parse_presentation(test::kF2xZ);
  CHECK(p.generators == std::vector<std::string>{"a", "b", "z"});
  REQUIRE(p.is_raag());
  CHECK(std::get<RaagGraph>(*p.engine).edges.size() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(format_word(p.relators[0], p.generators) == "a z a^-1 z^-1");
}

TEST_CASE("one-vertex raag has no relators") {
  GroupPresentation p = parse_presentation("raag { a; }");
  CHECK(p.generator_count() == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("pres with supplied rewriting rules") {
  GroupPresentation p = parse_presentation(test::kBS12);
  REQUIRE(p.engine);
  const auto& spec = std::get<RewritingSpec>(*p.engine);
  CHECK(spec.order == RewriteOrder::Wreath);
  CHECK(spec.rules.size() == 4);
  CHECK(format_word(spec.rules[3].rhs, p.generators) == "a^-1 t^-1 a");
}

TEST_CASE("relators may be equations") {
  GroupPresentation p =
      parse_presentation("pres { a, t | t a t^-1 = a^2 } rewriting wreath { t a -> a^2 t; "
                         "t a^-1 -> a^-2 t; t^-1 a^2 -> a t^-1; t^-1 a^-1 -> a^-1 t^-1 a }");
  CHECK(format_word(p.relators[0], p.generators) == "t a t^-1 a^-2");
}

TEST_CASE("free group needs no rules") {
  GroupPresentation p = parse_presentation("pres { a, b | }  # free");
  CHECK(p.relators.empty());
  CHECK(p.engine);
}

TEST_CASE("grammar errors carry positions") {
  auto position = [](const char* text) {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK(position("raag { a, b;\n  a-c }") == std::make_pair(std::size_t{2}, std::size_t{3}));
  CHECK(position("raag { a, b; a-a }").first == 1);
  CHECK(position("raag { a, a; }").first == 1);
  CHECK(position("pres { a, b | a b a^-1 b^-1 }").first == 1);
  CHECK(position("group { a }").first == 1);
  CHECK(position("raag { a, b; a-b").first == 1);
}

TEST_CASE("format_presentation parses back to the same presentation") {
  for (const char* text : {test::kZ, test::kZ2, test::kF2, test::kF2xZ, test::kBS12}) {
    GroupPresentation p = parse_presentation(text);
    GroupPresentation q = parse_presentation(format_presentation(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
  }
}
