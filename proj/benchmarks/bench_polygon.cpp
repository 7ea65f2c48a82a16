#include <benchmark/benchmark.h>

#include "cluster/polygon.hpp"

namespace {

using namespace cluster;

// Longest diagonal of the zigzag polygon: from vertex 1 to the middle of
// the far side.
void BM_EnumerateTPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Triangulation t = zigzag(n);
  const int b = 1 + t.ngon() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_t_paths(t, 1, b));
  state.counters["paths"] = static_cast<double>(enumerate_t_paths(t, 1, b).size());
}

void BM_ExpandVariable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Triangulation t = zigzag(n);
  const int b = 1 + t.ngon() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(expand_variable(t, 1, b, false));
}

void BM_FlipGraph(benchmark::State& state) {
  const Triangulation t = zigzag(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flip_graph(t));
}

}  // namespace

BENCHMARK(BM_EnumerateTPaths)->DenseRange(3, 9, 2);
BENCHMARK(BM_ExpandVariable)->DenseRange(3, 9, 2);
BENCHMARK(BM_FlipGraph)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
