// Serial reference vs OpenMP for the hot loops.

#include <benchmark/benchmark.h>

#include "ctsp/factor_select.hpp"
#include "ctsp/generators.hpp"
#include "ctsp/kernels.hpp"
#include "ctsp/matching.hpp"
#include "ctsp/pipeline.hpp"

using namespace ctsp;

namespace {

kernels::Exec exec_of(const benchmark::State& st) {
  return st.range(1) ? kernels::Exec::parallel : kernels::Exec::serial;
}

void BM_ThreeEdgeCuts(benchmark::State& st) {
  const Graph g = random_cubic_bridgeless(static_cast<int>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::three_edge_cuts(g, exec_of(st)));
}

void BM_BridgesBruteForce(benchmark::State& st) {
  const Graph g = random_cubic_bridgeless(static_cast<int>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::bridges_brute_force(g, exec_of(st)));
}

Graph irreducible_random(int n) {
  for (std::uint64_t seed = 1;; ++seed) {
    Graph g = random_cubic_bridgeless(n, seed);
    if (!find_reducible(g)) return g;
  }
}

void BM_ArgminWeight(benchmark::State& st) {
  const Graph g = irreducible_random(static_cast<int>(st.range(0)));
  const auto cols = build_collections(g);
  const auto weights = edge_weights(g, cols);
  std::vector<std::vector<EdgeId>> sets;
  for (const auto& m : enumerate_perfect_matchings(g)) sets.push_back(m.edges);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::argmin_weight(sets, weights, exec_of(st)));
  st.counters["matchings"] = static_cast<double>(sets.size());
}

void BM_Pipeline(benchmark::State& st) {
  const Graph g = random_cubic_bridgeless(static_cast<int>(st.range(0)), 11);
  PipelineOptions o;
  o.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(run_pipeline(g, o).tour.length);
}

}  // namespace

BENCHMARK(BM_ThreeEdgeCuts)->ArgsProduct({{16, 20, 22}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BridgesBruteForce)->ArgsProduct({{100, 1000}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ArgminWeight)->ArgsProduct({{16, 20}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Pipeline)->ArgsProduct({{14, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
