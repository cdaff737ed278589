#include <benchmark/benchmark.h>

#include "novikov/catalog.hpp"
#include "novikov/chain_complex.hpp"
#include "novikov/fibring.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/presentation.hpp"
#include "novikov/twisted.hpp"

namespace {

using namespace novikov;

GroupPtr catalog_group(const std::string& name) {
  return make_group(parse_presentation(catalog_entry(name).presentation));
}

void BM_RaagNormalForm(benchmark::State& state) {
  GroupPtr g = make_group(parse_presentation("raag { a, b, c, d; a-b, b-c, c-d }"));
  fixtures::Rng rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) {
    words.push_back(fixtures::random_word(g->generator_count(), state.range(0), rng));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g->embed(words[i++ % words.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RaagNormalForm)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_RewritingNormalForm(benchmark::State& state) {
  GroupPtr g = catalog_group("BS12");
  fixtures::Rng rng(2);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) {
    words.push_back(fixtures::random_word(g->generator_count(), state.range(0), rng));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(g->embed(words[i++ % words.size()]));
}
BENCHMARK(BM_RewritingNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_RingProduct(benchmark::State& state) {
  GroupPtr g = catalog_group("F2xZ");
  fixtures::Rng rng(3);
  RingElement x = fixtures::random_ring_element(g, state.range(0), 4, rng);
  RingElement y = fixtures::random_ring_element(g, state.range(0), 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RingProduct)->Arg(4)->Arg(16)->Arg(64);

void BM_NovikovInvert(benchmark::State& state) {
  GroupPtr g = catalog_group("Z2");
  auto phi = std::make_shared<const Character>(
      Character({RealValue(1), RealValue::sqrt_term(2)}));
  RingElement x = RingElement::one(g);
  x.add_term(g->generator(0), -1);
  x.add_term(g->generator(1), 2);
  NovikovElement nx(x, phi);
  ExtendedValue target(RealValue(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert(nx, target));
}
BENCHMARK(BM_NovikovInvert)->Arg(8)->Arg(16)->Arg(32);

void BM_StructureFunctions(benchmark::State& state) {
  GroupPtr g = catalog_group("F2xZ");
  fixtures::Rng rng(4);
  auto groups = std::vector<GroupPtr>{g};
  auto f = fixtures::random_quotient(groups, 12, rng);
  if (!f) {
    state.SkipWithError("no quotient");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(structure_functions(*f->group, f->quotient));
}
BENCHMARK(BM_StructureFunctions);

void BM_Certify(benchmark::State& state, const char* name, std::vector<Rational> images) {
  ChainComplex complex = build_complex(catalog_group(name));
  Character phi = Character::rational(images);
  for (auto _ : state) benchmark::DoNotOptimize(fibred_check(complex, phi));
}
BENCHMARK_CAPTURE(BM_Certify, Z3, "Z3", {1, 2, 3});
BENCHMARK_CAPTURE(BM_Certify, F2xZ, "F2xZ", {-1, 4, 1});
BENCHMARK_CAPTURE(BM_Certify, BS12, "BS12", {1});

}  // namespace
BENCHMARK_MAIN();
