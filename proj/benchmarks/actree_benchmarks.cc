#include <benchmark/benchmark.h>

#include <map>
#include <string>
#include <tuple>

#include "actree/ac_tree.hpp"
#include "actree/dominators.hpp"
#include "actree/sssp.hpp"
#include "bench.hpp"

namespace {

using actree::Graph;

const char* const kFamilies[] = {"random", "dag", "layered", "nested"};

// Graphs are cached so that generation stays out of the timed region.
const Graph& Cached(int family, std::size_t n) {
  static std::map<std::pair<int, std::size_t>, Graph> cache;
  auto it = cache.find({family, n});
  if (it == cache.end()) {
    it = cache.emplace(std::pair{family, n}, actree::tools::GenerateFamily(kFamilies[family], n, 1)).first;
  }
  return it->second;
}

void Annotate(benchmark::State& state, const Graph& g) {
  state.SetLabel(kFamilies[state.range(0)]);
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * (g.node_count() + g.arc_count())));
}

void BM_DominatorTree(benchmark::State& state) {
  const Graph& g = Cached(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(actree::ComputeDominatorTree(g));
  Annotate(state, g);
}

void BM_BuildAcTree(benchmark::State& state) {
  const Graph& g = Cached(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(actree::BuildAcTree(g));
  Annotate(state, g);
}

void BM_Dijkstra(benchmark::State& state) {
  const Graph& g = Cached(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(actree::Dijkstra(g));
  Annotate(state, g);
}

void BM_RecursiveDijkstra(benchmark::State& state) {
  const Graph& g = Cached(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const actree::AcTree ac = actree::BuildAcTree(g);
  for (auto _ : state) benchmark::DoNotOptimize(actree::RecursiveDijkstra(g, ac));
  Annotate(state, g);
}

void BM_DagShortestPaths(benchmark::State& state) {
  const Graph& g = Cached(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(actree::DagShortestPaths(g));
  Annotate(state, g);
}

void AllFamilies(benchmark::internal::Benchmark* b) {
  for (int f = 0; f < 4; ++f) {
    for (int64_t n = 1 << 10; n <= 1 << 16; n <<= 2) b->Args({f, n});
  }
}

void AcyclicFamilies(benchmark::internal::Benchmark* b) {
  for (int f : {1, 2}) {
    for (int64_t n = 1 << 10; n <= 1 << 16; n <<= 2) b->Args({f, n});
  }
}

}  // namespace

BENCHMARK(BM_DominatorTree)->Apply(AllFamilies);
BENCHMARK(BM_BuildAcTree)->Apply(AllFamilies);
BENCHMARK(BM_Dijkstra)->Apply(AllFamilies);
BENCHMARK(BM_RecursiveDijkstra)->Apply(AllFamilies);
BENCHMARK(BM_DagShortestPaths)->Apply(AcyclicFamilies);

BENCHMARK_MAIN();
