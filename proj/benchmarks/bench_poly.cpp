#include <benchmark/benchmark.h>

#include "cluster/poly.hpp"

namespace {

using cluster::LaurentPoly;

LaurentPoly linear(std::size_t m) {
  LaurentPoly p = LaurentPoly::constant(m, 1);
  for (std::size_t j = 0; j < m; ++j) p += LaurentPoly::variable(m, j);
  return p;
}

void BM_Multiply(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto a = linear(m).pow(4), b = linear(m).pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>((a * b).size());
}

void BM_DivExact(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto q = linear(m).pow(3), p = q * linear(m).pow(4);
  for (auto _ : state) benchmark::DoNotOptimize(cluster::div_exact(p, q));
}

void BM_IsLogConcave(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto p = linear(m).pow(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(cluster::is_log_concave(p));
  state.counters["terms"] = static_cast<double>(p.size());
}

}  // namespace

BENCHMARK(BM_Multiply)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_DivExact)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_IsLogConcave)->Args({2, 8})->Args({3, 8})->Args({4, 6});
