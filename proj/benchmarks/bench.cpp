#include <benchmark/benchmark.h>

#include <random>

#include "raag/corpus.hpp"
#include "raag/factorizer.hpp"

using namespace raag;

static SimpleGraph P5() { return SimpleGraph::parse_edge_list("a b\nb c\nc d\nd e\n"); }

static Word random_word(const SimpleGraph& g, int length, std::mt19937& rng) {
  std::uniform_int_distribution<int> gen(0, g.vertex_count() - 1), sign(0, 1);
  Word w;
  for (int i = 0; i < length; ++i)
    w.push_back({gen(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
  return w;
}

static void BM_NormalForm(benchmark::State& state) {
  SimpleGraph g = P5();
  std::mt19937 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(g, state.range(0), rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(g, words[i++ % words.size()]));
  }
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(32)->Arg(128);

static void BM_BuildHypergraph(benchmark::State& state) {
  auto graphs = connected_graphs(static_cast<int>(state.range(0)));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_flags_hypergraph(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_BuildHypergraph)->Arg(4)->Arg(5)->Arg(6);

static void BM_Symmetries(benchmark::State& state) {
  auto graphs = connected_graphs(6);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(graphs[i++ % graphs.size()].symmetries());
  }
}
BENCHMARK(BM_Symmetries);

static void BM_RouteGenerators(benchmark::State& state) {
  SimpleGraph g = P5();
  FlagsHypergraph fh = build_flags_hypergraph(g);
  auto gens = enumerate_laurence_generators(g);
  for (auto _ : state) {
    for (const auto& gen : gens)
      benchmark::DoNotOptimize(route_laurence_generator(g, fh, gen, 4));
  }
}
BENCHMARK(BM_RouteGenerators);

BENCHMARK_MAIN();
