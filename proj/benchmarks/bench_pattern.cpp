#include <benchmark/benchmark.h>

#include "cluster/pattern.hpp"

namespace {

using namespace cluster;

void BM_MutateAlternating(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Seed s0 = principal_seed(a_n_matrix(n));
  std::vector<std::size_t> path;
  for (std::size_t i = 0; i < 2 * n; ++i) path.push_back(i % n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(mutate_along(s0, path));
}

void BM_ExchangeGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Seed s0 = coefficient_free_seed(a_n_matrix(n));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exchange_graph(s0));
}

void BM_PrincipalWalk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Seed s0 = principal_seed(a_n_matrix(n));
  for (auto _ : state) {
    std::size_t visited = 0;
    walk_exchange_graph(s0, true, kDefaultSeedBudget, [&](const PatternVertex&) { ++visited; });
    benchmark::DoNotOptimize(visited);
  }
}

}  // namespace

BENCHMARK(BM_MutateAlternating)->DenseRange(2, 6);
BENCHMARK(BM_ExchangeGraph)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrincipalWalk)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
