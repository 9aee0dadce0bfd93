#include <benchmark/benchmark.h>

#include "boroczky/fatpoints.hpp"

using namespace boroczky;

namespace {

void BM_SymbolicCubeRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Configuration c = build_config(n);
  IncidenceReport rep = incidence_report(c);
  FatPointScheme s = FatPointScheme::triple_points(c, rep);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_piece_dim(s, 3, n));
}
BENCHMARK(BM_SymbolicCubeRank)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_IdealSliceRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Configuration c = build_config(n);
  IncidenceReport rep = incidence_report(c);
  FatPointScheme s = FatPointScheme::triple_points(c, rep);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_piece_dim(s, 1, n / 2 + 2));
}
BENCHMARK(BM_IdealSliceRank)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace
