#include <benchmark/benchmark.h>

#include "boroczky/boroczky.hpp"
#include "boroczky/elliptic.hpp"

using namespace boroczky;

namespace {

void BM_BuildConfig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_config(n));
}
BENCHMARK(BM_BuildConfig)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Incidence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Configuration c = build_config(n);
  for (auto _ : state) benchmark::DoNotOptimize(incidence_report(c));
}
BENCHMARK(BM_Incidence)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_TorsionTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_E6());
}
BENCHMARK(BM_TorsionTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
