#include <benchmark/benchmark.h>

#include "cluster/verify.hpp"

namespace {

using namespace cluster;

void BM_Main1(benchmark::State& state) {
  VerifyOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_main1(static_cast<std::size_t>(state.range(0)), opt));
}

void BM_A2Monomials(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_a2_monomials(static_cast<unsigned>(state.range(0))));
}

void BM_A2StructureConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(explore_a2_structure_constants(static_cast<unsigned>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Main1)->Args({4, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_A2Monomials)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_A2StructureConstants)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
