#include <benchmark/benchmark.h>

#include <random>

#include "antinef/monomial.hpp"
#include "antinef/oracle.hpp"

namespace {

using namespace antinef;

MonomialIdeal power(int dim, int n) { return power_ideal(dim, n); }

void BM_NewtonClosure(benchmark::State& state) {
  std::mt19937 rng(42);
  const int max_exp = static_cast<int>(state.range(0));
  std::vector<Exponent> gens{{max_exp, 0}, {0, max_exp}};
  for (int i = 0; i < 4; ++i)
    gens.push_back({1 + static_cast<int>(rng() % max_exp),
                    1 + static_cast<int>(rng() % max_exp)});
  MonomialIdeal ideal = MonomialIdeal::make(2, std::move(gens));
  for (auto _ : state) {
    MonomialIdeal closed = newton_closure(ideal);
    benchmark::DoNotOptimize(closed);
  }
}
BENCHMARK(BM_NewtonClosure)->RangeMultiplier(2)->Range(4, 32);

void BM_EnumerateColength(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ColengthEnumeration e = enumerate_colength(n, 16);
    benchmark::DoNotOptimize(e);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EnumerateColength)->DenseRange(6, 14, 2)->Complexity();

void BM_MonomialChain(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  MonomialIdeal m = power(2, 1);
  MonomialIdeal mk = power(2, k);
  for (auto _ : state) {
    auto steps = chain(m, mk);
    benchmark::DoNotOptimize(steps);
  }
}
BENCHMARK(BM_MonomialChain)->DenseRange(2, 6);

void BM_EquationSearch(benchmark::State& state) {
  const Poly y{{{2, 1}, Rat(1)}};
  const std::vector<Poly> gens{{{{3, 0}, Rat(1)}}, {{{0, 2}, Rat(1)}}};
  OracleBounds bounds;
  bounds.deg_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Certificate cert = integral_equation_search(y, gens, bounds, 5);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_EquationSearch)->DenseRange(6, 12, 2);

}  // namespace
