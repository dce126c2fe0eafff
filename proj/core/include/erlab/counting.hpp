#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "erlab/bigint.hpp"
#include "erlab/census.hpp"
#include "erlab/family.hpp"

namespace erlab {

struct CountingLimits {
  unsigned max_subset_bits = 24;
  std::uint64_t max_oracle_evals = 100'000'000;
  unsigned jobs = 1;
};

/// a[m] = number of partitions of the vertex set into exactly m nonempty independent sets.
struct PartitionVector {
  std::vector<BigCount> a;

  /// Sum over m of a[m] * r (r-1) ... (r-m+1): the number of proper r-colourings.
  BigCount evaluate(unsigned long r) const;
};

/// Subset dynamic programme. Throws CapacityError if the graph has more than
/// max_subset_bits vertices; at most 25 bits are accepted so counts fit in 64 bits.
PartitionVector partition_vector(const ConflictGraph& g, unsigned max_subset_bits = 24);

/// Tries every map V -> [r]. Throws CapacityError if r^|V| exceeds limits.max_oracle_evals.
BigCount count_bruteforce(const ConflictGraph& g, unsigned r, const CountingLimits& limits = {});

enum class CountMethod { PartitionVector, BruteForce, Mixed };
const char* to_string(CountMethod m);

struct CountResult {
  BigCount count;
  CountMethod method = CountMethod::PartitionVector;
  std::size_t components = 0;
};

std::vector<std::vector<std::size_t>> connected_components(const ConflictGraph& g);

/// Product over connected components; partition vector where it fits, brute force otherwise.
CountResult count_colourings(const ConflictGraph& g, unsigned r, const CountingLimits& limits = {});
CountResult count_colourings(const Family& f, unsigned r, unsigned t, const CountingLimits& limits = {});

/// A partition of the colour set [r] (0-based colours) into nonempty parts.
class ColourPartition {
 public:
  ColourPartition(unsigned r, std::vector<std::vector<unsigned>> parts);
  /// Consecutive blocks of the given sizes: {0..m1-1}, {m1..m1+m2-1}, ...
  static ColourPartition from_sizes(const std::vector<unsigned>& sizes);

  unsigned r() const noexcept { return r_; }
  std::size_t size() const noexcept { return parts_.size(); }
  const std::vector<std::vector<unsigned>>& parts() const noexcept { return parts_; }
  std::vector<unsigned> sizes() const;

 private:
  unsigned r_;
  std::vector<std::vector<unsigned>> parts_;
};

/// |Phi(C)|: product over union members of the total size of the parts whose stars contain them.
/// Throws DomainError if a star is not t-intersecting or the counts disagree.
BigCount count_phi(const std::vector<Family>& stars, const ColourPartition& cp, unsigned t);
/// Same product from per-member star-membership masks (bit i = member of star i).
BigCount phi_from_memberships(const std::vector<std::uint64_t>& memberships,
                              const std::vector<unsigned>& part_sizes);

struct ColouringRecord {
  std::vector<unsigned> colour_of;  // member index -> colour in [0, r)
  unsigned r = 0;                   // 0 means one more than the largest colour used
};

bool is_proper(const ConflictGraph& g, const ColouringRecord& col);

/// Calls visit for every proper r-colouring (depth first, colours in increasing order).
/// Stops early, returning false, once visit returns false.
bool for_each_colouring(const ConflictGraph& g, unsigned r,
                        const std::function<bool(const std::vector<unsigned>&)>& visit);

enum class Typicality { Typical, Atypical };

struct Classification {
  Typicality verdict = Typicality::Atypical;
  std::string witness;                    // empty when typical
  std::vector<std::size_t> assigned;      // colour -> position in the maximal list
  std::vector<unsigned> multiplicities;   // per distinct assigned family, descending
};

/// Assigns each colour class the first maximal family (census order) containing it and tests
/// the typicality clauses. An empty class is assigned the first maximal family with the
/// largest overlap with f.
Classification classify_colouring(const Family& f, const ColouringRecord& col, unsigned t,
                                  const MaximalContext& ctx);

}  // namespace erlab
