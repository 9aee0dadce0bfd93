#include <benchmark/benchmark.h>

#include "boroczky/elliptic.hpp"
#include "boroczky/field.hpp"

using namespace boroczky;

namespace {

FieldElement dense_element(const Field& f, unsigned long seed) {
  std::vector<Rat> c(f->dimension());
  unsigned long state = seed;
  for (auto& q : c) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    q = Rat(static_cast<long>(state % 19) - 9);
  }
  return f->make(std::move(c));
}

void BM_MulCyclotomic(benchmark::State& state) {
  Field f = FieldSpec::cyclotomic(static_cast<unsigned long>(state.range(0)));
  FieldElement a = dense_element(f, 1), b = dense_element(f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MulCyclotomic)->Arg(24)->Arg(36)->Arg(48);

void BM_InverseCyclotomic(benchmark::State& state) {
  Field f = FieldSpec::cyclotomic(static_cast<unsigned long>(state.range(0)));
  FieldElement a = dense_element(f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_InverseCyclotomic)->Arg(24)->Arg(36)->Arg(48);

void BM_InverseTower(benchmark::State& state) {
  Field f = fermat_field();
  FieldElement a = dense_element(f, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_InverseTower);

}  // namespace
