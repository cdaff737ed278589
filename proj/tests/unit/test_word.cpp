#include <doctest.h>

#include "novikov/error.hpp"
#include "novikov/word.hpp"

using namespace novikov;

namespace {
const std::vector<std::string> kNames = {"a", "b", "z"};
Word w(const std::string& s) { return parse_word(s, kNames); }
std::string f(const Word& x) { return format_word(x, kNames); }
}  // namespace

TEST_CASE("letters order generator before its inverse") {
  CHECK(Letter{0, false} < Letter{0, true});
  CHECK(Letter{0, true} < Letter{1, false});
}

TEST_CASE("parse and format round trip") {
  CHECK(f(w("a^2 b^-1 a")) == "a^2 b^-1 a");
  CHECK(f(w("a*a*b^-1")) == "a^2 b^-1");
  CHECK(f(w("1")) == "1");
  CHECK(f(w("")) == "1");
  CHECK(w("a^-3").size() == 3);
  CHECK(w("a^0").empty());
}

TEST_CASE("juxtaposed one-letter names split") {
  CHECK(w("za") == Word{{2, false}, {0, false}});
  CHECK(f(w("ba^-1")) == "b a^-1");
}

TEST_CASE("unknown names are rejected with a position") {
  CHECK_THROWS_AS(w("a c"), ParseError);
  try {
    w("a  q");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("free reduction and inverses") {
  CHECK(free_reduce(w("a b b^-1 a^-1")).empty());
  CHECK(f(free_reduce(w("a b^-1 b z"))) == "a z");
  CHECK(f(inverse(w("a b^2"))) == "b^-2 a^-1");
  CHECK(f(power(w("a b"), -2)) == "b^-1 a^-1 b^-1 a^-1");
}

TEST_CASE("shortlex compares length first") {
  CHECK(shortlex_less(w("z"), w("a a")));
  CHECK(shortlex_less(w("a b"), w("a^-1 a")));
  CHECK_FALSE(shortlex_less(w("a"), w("a")));
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sums(w("a b a^-2 z"), 3) == std::vector<std::int64_t>{-1, 1, 1});
}
