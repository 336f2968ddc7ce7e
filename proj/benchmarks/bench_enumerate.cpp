#include <benchmark/benchmark.h>

#include <semicov/apery.hpp>
#include <semicov/frobenius_fixed.hpp>
#include <semicov/oracle.hpp>
#include <semicov/semigroup.hpp>

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int f = static_cast<int>(state.range(0));
  semicov::EnumerateOptions options;
  options.workers = static_cast<int>(state.range(1));
  std::uint64_t count = 0;
  for (auto _ : state)
    count = semicov::enumerate(f, [](const semicov::FrontierNode&) {}, options);
  state.counters["members"] = static_cast<double>(count);
}
BENCHMARK(BM_Enumerate)
    ->ArgsProduct({{10, 12, 14, 16, 18}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateLowMemory(benchmark::State& state) {
  const int f = static_cast<int>(state.range(0));
  semicov::EnumerateOptions options;
  options.low_memory = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(semicov::enumerate(f, [](const semicov::FrontierNode&) {}, options));
}
BENCHMARK(BM_EnumerateLowMemory)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AperySwap(benchmark::State& state) {
  const semicov::NumericalSemigroup s = semicov::NumericalSemigroup::ordinary(40);
  const semicov::AperyTable table = s.apery(41);
  const int x = s.special_gaps().front();
  for (auto _ : state) benchmark::DoNotOptimize(semicov::apery_swap(table, x));
}
BENCHMARK(BM_AperySwap);

void BM_BruteEnumerate(benchmark::State& state) {
  const int f = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semicov::oracle::brute_enumerate(f));
}
BENCHMARK(BM_BruteEnumerate)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
