#include <benchmark/benchmark.h>

#include <random>

#include "erlab/constructions.hpp"
#include "erlab/counting.hpp"

using namespace erlab;

static ConflictGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  ConflictGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

static void BM_PartitionVectorRandom(benchmark::State& state) {
  const ConflictGraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(count_colourings(g, 4));
}
BENCHMARK(BM_PartitionVectorRandom)->DenseRange(8, 20, 4);

static void BM_BruteForceRandom(benchmark::State& state) {
  const ConflictGraph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(count_bruteforce(g, 3));
}
BENCHMARK(BM_BruteForceRandom)->DenseRange(6, 12, 3);

static void BM_CountFullSets(benchmark::State& state) {
  const Family f = full_family(Universe::sets(static_cast<unsigned>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(count_colourings(f, 3, 1));
}
BENCHMARK(BM_CountFullSets)->DenseRange(5, 7, 1);

static void BM_CountPhiV2(benchmark::State& state) {
  const UnionResult u = construct_v2(GaloisField::make(3), 5, 2, 1, 3);
  const ColourPartition cp = ColourPartition::from_sizes({3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(count_phi(u.stars, cp, 1));
}
BENCHMARK(BM_CountPhiV2);

BENCHMARK_MAIN();
