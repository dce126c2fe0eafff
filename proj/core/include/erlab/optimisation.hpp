#pragma once

#include <vector>

#include "erlab/bigint.hpp"

namespace erlab {

/// Parts sorted in descending order.
using Composition = std::vector<unsigned>;

/// Maximum of prod m_i over positive integers summing to r (1 for r = 0 and r = 1).
BigCount opt_value(long r);
BigCount objective(const Composition& m);

struct OptResult {
  BigCount value;
  std::vector<Composition> argmax;  // in descending lexicographic order
};

/// The optimal partitions from their known shape: all parts 3, except one 2 when r = 2 mod 3,
/// and either one 4 or two 2s when r = 1 mod 3. Descending lexicographic order.
std::vector<Composition> opt_structure(long r);

/// Exhaustive over all partitions of r, r <= 40.
OptResult opt_bruteforce(long r);

/// Every non-optimal partition satisfies 9 OBJ <= 8 OPT. r <= 40.
bool verify_opt_gap(long r);
/// 4 OPT(r-1) <= 3 OPT(r); r >= 3.
bool verify_opt_monotone(long r);

/// All partitions of r in descending lexicographic order.
std::vector<Composition> partitions(unsigned r);

struct VsOptResult {
  bool holds = true;
  std::vector<Composition> equality_cases;
  std::vector<Composition> feasible;  // every multiset examined, descending
};

/// For each multiset 2 <= m_j <= s with sum C(m_j, 2) = C(s, 2), tests
/// s * 3^(sum(m_j - 1)) >= 3^(s-1) * prod m_j. 2 <= s <= 9.
VsOptResult vsopt_check(unsigned s);
/// The per-multiset comparison: sign of s * 3^(sum(m_j - 1)) - 3^(s-1) * prod m_j.
int vsopt_compare(unsigned s, const Composition& m);

/// g(x) = (x - 1 - log_3 x) / C(x, 2). Decides g(x) > g(x+1) through the equivalent
/// integer comparison (3(x+1))^C(x,2) > x^C(x+1,2). x >= 2.
bool g_decreasing_at(unsigned x);

}  // namespace erlab
