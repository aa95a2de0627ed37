#include "bicount/bounds.hpp"
#include "bicount/enumeration.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CountExact(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bicount::count_exact(n, n));
}
BENCHMARK(BM_CountExact)->Arg(8)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_TheoremBound(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bicount::theorem_bound(n, n));
}
BENCHMARK(BM_TheoremBound)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_RatioCell(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bicount::ratio_cell(p, 4));
}
BENCHMARK(BM_RatioCell)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_OrbitCensus(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bicount::orbit_census(4, q));
}
BENCHMARK(BM_OrbitCensus)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
