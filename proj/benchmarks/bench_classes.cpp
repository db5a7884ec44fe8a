#include <benchmark/benchmark.h>

#include "niven/classes.hpp"
#include "niven/constructions.hpp"

static void BM_DensityScanFast(benchmark::State& state) {
  const std::uint64_t x_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto points = niven::density_scan(x_max, 2, x_max);
    benchmark::DoNotOptimize(points.back().count);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(x_max / 2));
}
BENCHMARK(BM_DensityScanFast)->Arg(1001)->Arg(10001)->Unit(benchmark::kMillisecond);

static void BM_MinClassIndex(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto record = niven::min_class_index(k);
    benchmark::DoNotOptimize(record.m_min);
  }
}
BENCHMARK(BM_MinClassIndex)->Arg(127)->Arg(255)->Arg(511);

static void BM_MembershipDp(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(niven::is_in_class(k, 3));
  }
}
BENCHMARK(BM_MembershipDp)->Arg(101)->Arg(501);

static void BM_Representation(benchmark::State& state) {
  const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t x = 0;
  for (auto _ : state) {
    auto set = niven::distinct_power_representation(k, x);
    benchmark::DoNotOptimize(set.exponents.data());
    x = (x + 1) % k;
  }
}
BENCHMARK(BM_Representation)->Arg(101)->Arg(1001);

BENCHMARK_MAIN();
