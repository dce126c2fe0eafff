#pragma once

// Reference implementations that share no code with the library. Slow on purpose.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "erlab/bigint.hpp"
#include "erlab/family.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency random_adjacency(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Adjacency a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) a[i][j] = a[j][i] = true;
  return a;
}

inline erlab::ConflictGraph to_graph(const Adjacency& a) {
  erlab::ConflictGraph g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j]) g.add_edge(i, j);
  return g;
}

inline Adjacency from_graph(const erlab::ConflictGraph& g) {
  Adjacency a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j) a[i][j] = g.adjacent(i, j);
  return a;
}

/// Proper r-colourings by plain backtracking over vertices in order.
inline std::uint64_t count_colourings(const Adjacency& a, unsigned r) {
  const std::size_t n = a.size();
  std::vector<unsigned> col(n);
  std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t v) -> std::uint64_t {
    if (v == n) return 1;
    std::uint64_t total = 0;
    for (unsigned c = 0; c < r; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = !(a[u][v] && col[u] == c);
      if (!ok) continue;
      col[v] = c;
      total += rec(v + 1);
    }
    return total;
  };
  return rec(0);
}

/// Maximal independent sets by testing every vertex subset; n <= 20.
inline std::set<std::vector<std::size_t>> maximal_independent_sets(const Adjacency& a) {
  const std::size_t n = a.size();
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool indep = true;
    for (std::size_t i = 0; i < n && indep; ++i)
      for (std::size_t j = i + 1; j < n && indep; ++j)
        if ((m >> i & 1) && (m >> j & 1) && a[i][j]) indep = false;
    if (!indep) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (m >> v & 1) continue;
      bool blocked = false;
      for (std::size_t u = 0; u < n; ++u)
        if ((m >> u & 1) && a[u][v]) blocked = true;
      if (!blocked) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(i);
    out.insert(s);
  }
  return out;
}

/// Gaussian binomial by the q-Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
inline erlab::BigCount gauss_pascal(long n, long k, unsigned long q) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<erlab::BigCount>> t(n + 1, std::vector<erlab::BigCount>(n + 1, 0));
  for (long i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (long j = 1; j <= i; ++j) {
      erlab::BigCount qj = 1;
      for (long e = 0; e < j; ++e) qj *= q;
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? qj * t[i - 1][j] : erlab::BigCount(0));
    }
  }
  return t[n][k];
}

inline erlab::BigCount pascal_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<erlab::BigCount> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<erlab::BigCount> next(i + 1, 1);
    for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace oracle
