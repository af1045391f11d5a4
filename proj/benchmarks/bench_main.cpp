#include <benchmark/benchmark.h>

#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/graph.hpp"
#include "wiener/polynomial.hpp"
#include "wiener/roots.hpp"

using namespace wiener;

static void BM_ConnectedSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sweep = enumerate_connected_distributions(n, SweepOptions{static_cast<int>(state.range(1)), false});
    benchmark::DoNotOptimize(sweep.classes.size());
  }
}
BENCHMARK(BM_ConnectedSweep)->Args({6, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_FreeTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FreeTreeGenerator gen(n);
    std::size_t count = 0;
    while (gen.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_FreeTrees)->DenseRange(12, 17, 1)->Unit(benchmark::kMillisecond);

static void BM_DistanceDistribution(benchmark::State& state) {
  const Graph g = family_graph(FamilySpec{Family::path, {state.range(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(distance_distribution(g));
}
BENCHMARK(BM_DistanceDistribution)->RangeMultiplier(4)->Range(16, 256);

static void BM_TreeRoots(benchmark::State& state) {
  const auto trees = all_trees(static_cast<int>(state.range(0)));
  std::vector<ReducedPolynomial> polys;
  for (const auto& t : trees) polys.push_back(reduce(wiener_polynomial(distance_distribution(t))));
  for (auto _ : state) {
    for (const auto& p : polys) benchmark::DoNotOptimize(roots(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(polys.size()));
}
BENCHMARK(BM_TreeRoots)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_PathRoots(benchmark::State& state) {
  const auto p = reduce(family_polynomial(FamilySpec{Family::path, {state.range(0)}}));
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_PathRoots)->Arg(20)->Arg(50)->Arg(100);
BENCHMARK_MAIN();
