#include <benchmark/benchmark.h>

#include "antinef/adjacency.hpp"
#include "antinef/graph.hpp"

namespace {

using namespace antinef;

DualGraph chain(int n) {
  std::vector<long> selfs(n, -2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return DualGraph::validate(std::move(selfs), std::move(edges));
}

void BM_Validate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<long> selfs(n, -2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (auto _ : state) {
    DualGraph g = DualGraph::validate(selfs, edges);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_Validate)->Range(8, 256);

void BM_FundamentalCycle(benchmark::State& state) {
  DualGraph g = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Cycle z = fundamental_cycle(g);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_FundamentalCycle)->Range(8, 256);

void BM_AntiNefClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DualGraph g = chain(n);
  Cycle seed = Cycle::unit(n, 0);
  for (auto _ : state) {
    Cycle z = anti_nef_closure(g, seed);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_AntiNefClosure)->Range(8, 128);

void BM_AdjacencyReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DualGraph g = chain(n);
  Cycle e = Cycle::ones(n);
  for (auto _ : state) {
    AdjacencyReport report = adjacent_below(g, e);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_AdjacencyReport)->Range(4, 64);

void BM_GraphChain(benchmark::State& state) {
  DualGraph g = chain(1);
  Cycle hi = Cycle::ones(1);
  Cycle lo = hi;
  lo.coeffs[0] = state.range(0);
  for (auto _ : state) {
    auto steps = chain_graph(g, hi, lo);
    benchmark::DoNotOptimize(steps);
  }
}
BENCHMARK(BM_GraphChain)->DenseRange(2, 5);

}  // namespace
