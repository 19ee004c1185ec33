#include <benchmark/benchmark.h>

#include "anchorrec/anchorrec.hpp"

using namespace anchorrec;

namespace {

void BM_CanonicalKeyRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (std::uint64_t s = 0; s < 16; ++s) graphs.push_back(random_graph(n, s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalKeyRandom)->Arg(8)->Arg(10)->Arg(16)->Arg(32)->Arg(64);

void BM_CanonicalKeyCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKeyCycle)->Arg(10)->Arg(20)->Arg(40);

void BM_AutomorphismGroupEmpty(benchmark::State& state) {
  const Graph g = empty_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).log2_order());
}
BENCHMARK(BM_AutomorphismGroupEmpty)->Arg(12)->Arg(24);

void BM_IsAnchor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = three_log2_ceil(static_cast<std::uint64_t>(n));
  const Graph g = random_graph(n, 1);
  Rng rng(2);
  std::vector<VertexSet> subsets;
  for (int i = 0; i < 16; ++i) subsets.push_back(rng.subset(n, m));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_anchor(g, subsets[i++ % subsets.size()]).is_anchor);
}
BENCHMARK(BM_IsAnchor)->Arg(20)->Arg(30)->Arg(40);

void BM_CountCopies(benchmark::State& state) {
  const Graph host = random_graph(static_cast<int>(state.range(0)), 3);
  const Graph pattern = cycle_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(count_induced_copies(host, pattern));
}
BENCHMARK(BM_CountCopies)->Arg(12)->Arg(24);

void BM_Reconstruct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = three_log2_ceil(static_cast<std::uint64_t>(n)) - 2;
  Graph g;
  AnchorSearchResult found;
  for (std::uint64_t s = 0; !found.found(); ++s) {
    g = random_graph(n, s);
    found = find_stable_anchor(g, m, 64, s);
  }
  const auto bundle = build_bundle(g, found.certificate->anchor);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(bundle));
}
BENCHMARK(BM_Reconstruct)->Arg(20)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FullDeck(benchmark::State& state) {
  const Graph g = random_graph(12, 4);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(full_deck(g, m).total());
}
BENCHMARK(BM_FullDeck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
