#include <benchmark/benchmark.h>

#include "erlab/census.hpp"

using namespace erlab;

static void BM_CensusSets(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const ConflictGraph g = build_conflict_graph(full_family(Universe::sets(n, 2)), 1);
  for (auto _ : state) {
    const auto maximal = maximal_families(g);
    benchmark::DoNotOptimize(census_stats(maximal, g));
  }
}
BENCHMARK(BM_CensusSets)->DenseRange(5, 9, 1);

static void BM_CensusVectors(benchmark::State& state) {
  const ConflictGraph g = build_conflict_graph(full_family(Universe::vectors(GaloisField::make(2), 4, 2)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_families(g));
}
BENCHMARK(BM_CensusVectors);

BENCHMARK_MAIN();
