#include <benchmark/benchmark.h>

#include "niven/solver.hpp"

static void BM_MinimalNivenBinary(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = niven::minimal_niven(2, k);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_MinimalNivenBinary)->Arg(32)->Arg(64)->Arg(128)->Arg(253);

static void BM_MinimalNivenDecimal(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = niven::minimal_niven(10, k);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_MinimalNivenDecimal)->Arg(23)->Arg(100)->Arg(200);

static void BM_SolverWideBase(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = niven::minimal_niven(16, k);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SolverWideBase)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
