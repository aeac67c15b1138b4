#include <benchmark/benchmark.h>

#include "zrule/kernels.hpp"
#include "zrule/triangle.hpp"

using namespace zrule;

static void BM_WestReference(benchmark::State& state) {
  const auto gen = InitialGeneration::naturals();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::west_edge_reference(gen, state.range(0)));
}
BENCHMARK(BM_WestReference)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_WestSingleThread(benchmark::State& state) {
  const auto gen = InitialGeneration::naturals();
  kernels::set_thread_count(1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::west_edge_parallel(gen, state.range(0)));
  kernels::set_thread_count(0);
}
BENCHMARK(BM_WestSingleThread)->Arg(256)->Arg(1024)->Arg(8200)->Unit(benchmark::kMillisecond);

static void BM_WestOpenMP(benchmark::State& state) {
  const auto gen = InitialGeneration::naturals();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::west_edge_parallel(gen, state.range(0)));
}
BENCHMARK(BM_WestOpenMP)->Arg(256)->Arg(1024)->Arg(8200)->Unit(benchmark::kMillisecond);

static void BM_WestSquarefreeBits(benchmark::State& state) {
  const auto gen = InitialGeneration::squarefree_kernels();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::west_edge_parallel(gen, state.range(0)));
}
BENCHMARK(BM_WestSquarefreeBits)->Arg(1026)->Arg(8194)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
