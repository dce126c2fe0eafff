#include <benchmark/benchmark.h>

#include "erlab/ground.hpp"

using namespace erlab;

static void BM_EnumerateSubspaces(benchmark::State& state) {
  const FieldPtr f = GaloisField::make(static_cast<unsigned>(state.range(0)));
  const Universe u = Universe::vectors(f, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(u));
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePermutations(benchmark::State& state) {
  const Universe u = Universe::permutations(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_elements(u));
}
BENCHMARK(BM_EnumeratePermutations)->DenseRange(6, 8, 1);

static void BM_GaussianBinomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_binomial(state.range(0), state.range(0) / 2, 5));
}
BENCHMARK(BM_GaussianBinomial)->Arg(20)->Arg(80);

BENCHMARK_MAIN();
