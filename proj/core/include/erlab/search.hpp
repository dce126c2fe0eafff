#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erlab/bigint.hpp"
#include "erlab/census.hpp"
#include "erlab/constructions.hpp"
#include "erlab/counting.hpp"
#include "erlab/family.hpp"
#include "erlab/optimisation.hpp"

namespace erlab {

enum class SearchMethod { AllSubfamilies, UnionsOfMaximal };
const char* to_string(SearchMethod m);

struct SearchOptions {
  CountingLimits counting;
  CensusLimits census;
  unsigned max_ground = 20;         // exhaustive search covers 2^max_ground subfamilies at most
  std::uint64_t union_budget = 1'000'000;
  /// Skip subfamilies whose sorted degree sequence was already seen. A heuristic filter:
  /// it shortens the argmax list but is expected to leave max_count unchanged.
  bool degree_pruning = false;
  unsigned jobs = 1;
};

struct SearchResult {
  BigCount max_count = 0;
  std::vector<Bitset> argmax;  // member-index sets over the ground family, lexicographic
  BigCount families_examined = 0;
  BigCount families_pruned = 0;
  SearchMethod method = SearchMethod::AllSubfamilies;
  std::size_t verified = 0;  // argmax entries re-counted by brute force
};

/// Every subfamily of the ground family, counted exactly.
SearchResult exhaustive_optimal(const Family& ground, unsigned t, unsigned r, const SearchOptions& opt = {});
SearchResult exhaustive_optimal(const Universe& u, unsigned t, unsigned r, const SearchOptions& opt = {});

/// Every union of 1..max_parts maximal families of the universe.
SearchResult unions_of_maximal_search(const Universe& u, unsigned t, unsigned r, unsigned max_parts,
                                      const SearchOptions& opt = {});

/// Ordered size vectors (part i goes to star i) of length s that solve MAX(r), lexicographic.
std::vector<Composition> optimal_size_vectors(unsigned r, unsigned s);
/// Number of ordered set partitions of [r] into parts of the given sizes.
BigCount labelled_partitions(const Composition& sizes);
/// |C| for s labelled parts: the number of colour partitions of [r] into s parts with optimal
/// sizes. With generate, every partition is produced explicitly rather than counted.
BigCount optimal_partition_count(unsigned r, unsigned s, bool generate = false);

struct SwapRow {
  Composition sizes;
  BigCount phi_before;
  BigCount phi_after;
  Rational ratio;
  bool exceptional = false;  // the swapped star and every partner have two colours
  bool holds = false;        // ratio >= 6/5, or >= 1 when exceptional
};

struct SwapReport {
  std::vector<SwapRow> rows;
  Rational min_ratio;
  BigCount partitions;   // |C|, counting every colour partition behind each size vector
  std::vector<std::size_t> partners;
  bool holds = false;
};

/// Sets only. Replaces centre swap_index by centre_after and compares |Phi(C)| for every
/// optimal colour partition. Throws DomainError naming the failed hypothesis.
SwapReport compare_star_swap(unsigned n, unsigned k, unsigned t, unsigned r, const std::vector<KSet>& centres_before,
                             std::size_t swap_index, const KSet& centre_after);

struct FourVsTwoTwoReport {
  Composition before_sizes;  // (4, 3, ..., 3) on the first s-1 stars
  Composition after_sizes;   // (2, 3, ..., 3, 2) on all s stars
  BigCount phi_before;
  BigCount phi_after;
  bool holds = false;
};

FourVsTwoTwoReport compare_4v22(unsigned n, unsigned k, unsigned t, unsigned r, const std::vector<KSet>& centres);

struct TypicalityReport {
  BigCount typical = 0;
  BigCount atypical = 0;
  BigCount total = 0;
  CensusReport census;
  std::optional<BigCount> phi_sum;  // sum over C of |Phi(C)| when star data is supplied
  std::optional<BigCount> phi_max;
  std::optional<bool> sandwich;     // phi_sum >= typical >= phi_max
};

enum class CensusScope { Family, Universe };

/// Enumerates every (r,t)-colouring of f and classifies it. By default the census is of f's
/// own conflict graph; CensusScope::Universe uses every maximal family of the full universe.
TypicalityReport typicality_report(const Family& f, unsigned r, unsigned t, const SearchOptions& opt = {},
                                   CensusScope scope = CensusScope::Family, const UnionResult* stars = nullptr);

}  // namespace erlab
