#include <benchmark/benchmark.h>

#include "monotop/covers.hpp"
#include "monotop/graph.hpp"
#include "monotop/homology.hpp"
#include "monotop/resolution.hpp"

namespace {

using namespace monotop;

// Caterpillar: a spine of n vertices, each carrying one leaf.
Graph caterpillar(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) edges.emplace_back(i, i + 1);
    edges.emplace_back(i, n + i);
  }
  return Graph(VariableUniverse::numbered(2 * n, "v"), std::move(edges));
}

void BM_RealizeCycle(benchmark::State& state) {
  const auto ideal = edge_ideal(cycle_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(realize(ideal).size());
}
BENCHMARK(BM_RealizeCycle)->DenseRange(12, 24, 4);

void BM_HomologyCycle(benchmark::State& state) {
  const auto complex = realize(edge_ideal(cycle_graph(static_cast<std::size_t>(state.range(0)))));
  state.counters["faces"] = static_cast<double>(complex.size());
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(complex).groups.size());
}
BENCHMARK(BM_HomologyCycle)->DenseRange(9, 18, 3)->Unit(benchmark::kMillisecond);

void BM_HomologyCrossPolytope(benchmark::State& state) {
  const auto ideal = star_ideal(disjoint_edges(static_cast<std::size_t>(state.range(0))));
  const auto complex = realize(ideal);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(complex).groups.size());
}
BENCHMARK(BM_HomologyCrossPolytope)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ClassifyCaterpillar(benchmark::State& state) {
  const auto ideal = edge_ideal(caterpillar(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify(ideal).depth);
}
BENCHMARK(BM_ClassifyCaterpillar)->RangeMultiplier(2)->Range(4, 32);

void BM_AllResolutionsCaterpillar(benchmark::State& state) {
  const auto ideal = edge_ideal(caterpillar(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_maximal_resolutions(ideal, 1'000'000).nodes_visited);
  }
}
BENCHMARK(BM_AllResolutionsCaterpillar)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_EulerViaCovers(benchmark::State& state) {
  const auto ideal = edge_ideal(cycle_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(euler_via_covers(ideal));
}
BENCHMARK(BM_EulerViaCovers)->DenseRange(8, 20, 4);

void BM_WitnessCollapse(benchmark::State& state) {
  const auto ideal = edge_ideal(caterpillar(static_cast<std::size_t>(state.range(0))));
  const auto c = classify(ideal);
  for (auto _ : state) benchmark::DoNotOptimize(witness_collapse(ideal, c.resolution).steps.size());
}
BENCHMARK(BM_WitnessCollapse)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_GraphInvariants(benchmark::State& state) {
  const Graph g = caterpillar(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariants(g).domination);
}
BENCHMARK(BM_GraphInvariants)->DenseRange(4, 10, 2);

}  // namespace
BENCHMARK_MAIN();
