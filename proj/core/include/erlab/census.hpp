#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "erlab/bigint.hpp"
#include "erlab/bitset.hpp"
#include "erlab/family.hpp"

namespace erlab {

struct CensusLimits {
  std::size_t max_families = 1'000'000;
  unsigned jobs = 1;
};

/// Maximal independent sets of g, each once, in lexicographic order of index sets.
/// Throws CapacityError (with the partial count) past limits.max_families.
std::vector<Bitset> maximal_families(const ConflictGraph& g, const CensusLimits& limits = {});

struct CensusReport {
  BigCount M = 0;
  std::size_t N0 = 0;
  std::optional<std::size_t> N1;
  std::optional<std::size_t> N2;
  std::vector<std::size_t> extremal;  // positions in the maximal list
  std::optional<std::size_t> n1_witness;
  std::optional<std::pair<std::size_t, std::size_t>> n2_witness;
};

CensusReport census_stats(const std::vector<Bitset>& maximal, const ConflictGraph& g);

enum class EmpiricalSign { Positive, Negative, Inconclusive, Inapplicable };

struct EmpiricalCheck {
  EmpiricalSign sign = EmpiricalSign::Inapplicable;
  Rational lo = 0;  // enclosure of the condition value; meaningful unless Inapplicable
  Rational hi = 0;
};

/// Sign of N0 - max(N1, N2) - 6 lg M / (2 lg 3 - 3) from census values.
EmpiricalCheck check_3col_empirical(const CensusReport& report, unsigned max_precision_bits = 512);

const char* to_string(EmpiricalSign sign);

/// A census bundled with the ground family it indexes; the input to colouring classification.
struct MaximalContext {
  Family ground;
  std::vector<Bitset> maximal;
  CensusReport report;

  static MaximalContext of(const Family& ground, unsigned t, const CensusLimits& limits = {});
};

}  // namespace erlab
