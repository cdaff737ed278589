#include <doctest.h>

#include <deque>
#include <functional>
#include <random>
#include <set>

#include "helpers.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/normal_form.hpp"

using namespace novikov;

namespace {

// Shortlex-least word reachable by swapping adjacent commuting letters and
// deleting adjacent inverse pairs.
Word closure_minimum(const Word& start, const std::set<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  auto commute = [&](std::uint32_t x, std::uint32_t y) {
    return x != y && edges.count({std::min(x, y), std::max(x, y)}) > 0;
  };
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  Word best = start;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (shortlex_less(w, best)) best = w;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word next = w;
      if (w[i].generator == w[i + 1].generator && w[i].inverse != w[i + 1].inverse) {
        next.erase(next.begin() + i, next.begin() + i + 2);
      } else if (commute(w[i].generator, w[i + 1].generator)) {
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return best;
}

void all_words(std::size_t n, std::size_t length, Word& current, const std::function<void(const Word&)>& visit) {
  visit(current);
  if (current.size() == length) return;
  for (std::uint32_t g = 0; g < n; ++g) {
    for (bool inv : {false, true}) {
      current.push_back({g, inv});
      all_words(n, length, current, visit);
      current.pop_back();
    }
  }
}

}  // namespace

TEST_CASE("raag normal forms on small examples") {
  GroupPtr g = test::group("raag { a, z; a-z }");
  CHECK(test::nf(g, "za") == "a z");
  CHECK(test::nf(g, "a a^-1") == "1");
  CHECK(test::nf(g, "z a z^-1") == "a");

  GroupPtr path = test::group(test::kF2xZ);
  CHECK(test::nf(path, "b z a") == "b a z");
  CHECK(test::nf(path, "z b z^-1 a") == "b a");
  CHECK(test::nf(path, "a b a^-1") == "a b a^-1");
}

TEST_CASE("raag engine agrees with the commutation closure on all short words") {
  const std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> graphs = {
      {}, {{0, 1}}, {{0, 2}, {1, 2}}, {{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& edges : graphs) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> list(edges.begin(), edges.end());
    RaagEngine engine(3, RaagGraph{list});
    Word scratch;
    std::size_t checked = 0;
    all_words(3, 6, scratch, [&](const Word& w) {
      ++checked;
      Word expected = closure_minimum(w, edges);
      Word actual = engine.normal_form(w);
      if (actual != expected) {
        FAIL_CHECK("mismatch at " << format_word(w, std::vector<std::string>{"a", "b", "c"}));
      }
    });
    CHECK(checked == 1 + 6 + 36 + 216 + 1296 + 7776 + 46656);
  }
}

TEST_CASE("free reduction happens in every engine") {
  CHECK(test::nf(test::group(test::kF2), "a b b^-1 a^-1") == "1");
  CHECK(test::nf(test::group(test::kBS12), "a t t^-1 a^-1") == "1");
}

TEST_CASE("rewriting engine for BS(1,2)") {
  GroupPtr g = test::group(test::kBS12);
  CHECK(test::nf(g, "t a t^-1 a^-2") == "1");
  CHECK(test::nf(g, "t a t^-1") == "a^2");
  CHECK(test::nf(g, "t a") == "a^2 t");
  CHECK(test::nf(g, "t^-1 a^2 t") == "a");
  CHECK(test::nf(g, "t^2 a t^-2") == "a^4");
}

TEST_CASE("normal forms respect the group operations") {
  std::mt19937_64 rng(5);
  for (const char* text : {test::kBS12, test::kF2xZ, test::kZ3}) {
    GroupPtr g = test::group(text);
    for (int i = 0; i < 200; ++i) {
      Word u = fixtures::random_word(g->generator_count(), 6, rng);
      Word v = fixtures::random_word(g->generator_count(), 6, rng);
      Word x = fixtures::random_word(g->generator_count(), 6, rng);
      CHECK(g->embed(concat(u, inverse(u))).empty());
      CHECK(g->multiply(g->multiply(g->embed(u), g->embed(v)), g->embed(x)) ==
            g->multiply(g->embed(u), g->multiply(g->embed(v), g->embed(x))));
      CHECK(g->embed(g->generator_word(g->embed(u))) == g->embed(u));
    }
  }
}

TEST_CASE("rules that do not decrease are rejected") {
  CHECK_THROWS_AS(test::group("pres { a | a^2 } rewriting { a -> a^-1 a^2; }"), EngineRejection);
  CHECK_THROWS_AS(test::group("pres { a, t | t a t^-1 a^-2 } rewriting { t a -> a^2 t; }"),
                  EngineRejection);
}

TEST_CASE("incomplete systems are rejected") {
  CHECK_THROWS_AS(test::group("pres { a, b | a b a^-1 b^-1 } rewriting { b a -> a b; }"),
                  EngineRejection);
}

TEST_CASE("relators must reduce to the identity") {
  CHECK_THROWS_AS(test::group("pres { a, b | a b a b } rewriting { a^2 -> 1; }"), EngineRejection);
}

TEST_CASE("a complete system for <a, b | abab>") {
  GroupPtr g = test::group("pres { a, b | a b a b } rewriting { b a -> a^-1 b^-1; b^-1 a^-1 -> a b; }");
  CHECK(test::nf(g, "a b a b") == "1");
  CHECK(test::nf(g, "b a b") == "a^-1");
}
