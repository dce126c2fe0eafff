#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "erlab/bigint.hpp"
#include "erlab/family.hpp"

namespace erlab {

/// t fixed points of a permutation star: pi(index) = value, both 0-based.
struct PermCentre {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  friend bool operator==(const PermCentre&, const PermCentre&) = default;
};

using Centre = std::variant<KSet, Subspace, PermCentre>;

struct StarSpec {
  Universe universe;
  Centre centre;

  /// Size (or dimension, or number of fixed points) of the centre.
  unsigned t() const;
  /// Throws DomainError when the centre does not fit the universe.
  void validate() const;
};

/// Every element of the universe containing the centre.
Family star(const StarSpec& spec);

/// Measure of the intersection of two centres: common elements, dimension of the
/// intersection, or number of shared fixed points.
unsigned centre_intersection(const Universe& u, const Centre& a, const Centre& b);

struct UnionSpec {
  std::vector<StarSpec> stars;
  /// Required centre intersection sizes; pattern[i][j] for i != j is checked when present.
  std::optional<std::vector<std::vector<unsigned>>> pattern;
};

struct UnionResult {
  Family family;
  std::vector<Family> stars;
  std::vector<std::uint64_t> memberships;  // per member of family, bit i = lies in stars[i]
};

/// Throws DomainError naming the pair when the pattern does not match.
UnionResult union_of_stars(const UnionSpec& spec);

struct MultiplicityProfile {
  std::map<unsigned, std::size_t> histogram;  // m(V) -> number of members
  Rational correction;                        // product of m(V) 3^(1 - m(V))
};
MultiplicityProfile multiplicity_profile(const UnionResult& u);
MultiplicityProfile multiplicity_profile(const UnionSpec& spec);

struct CentreConfiguration {
  Subspace W;
  std::vector<Subspace> centres;
};

/// W = span of the first 2t coordinates; s subspaces T_i <= W of dimension t, pairwise
/// meeting in {0}, each extended by the least vector of W (first coordinate most
/// significant) outside U and every T_j + U, j < i. Requires q >= s - 1 and n >= 2t.
CentreConfiguration greedy_centres_in_W(FieldPtr field, unsigned t, unsigned s, unsigned n);

/// W split into t coordinate pairs; T_i takes line i of every pair, where line i < q is
/// <(1, i)> and line q is <(0, 1)>. Requires s <= q + 1 and n >= 2t.
CentreConfiguration orthogonal_sum_centres(FieldPtr field, unsigned t, unsigned s, unsigned n);

/// T_i = span of coordinates (i-1)t .. it-1. Requires n >= st.
std::vector<Subspace> independent_centres(FieldPtr field, unsigned t, unsigned s, unsigned n);

UnionSpec union_spec_from_centres(const Universe& u, const std::vector<Subspace>& centres);

/// The union of s t-stars with linearly independent centres.
UnionResult construct_v1(FieldPtr field, unsigned n, unsigned k, unsigned t, unsigned s);
/// The union of s t-stars whose centres are the greedy configuration inside W.
UnionResult construct_v2(FieldPtr field, unsigned n, unsigned k, unsigned t, unsigned s);

/// Subspace of GF(q)^n spanned by the given standard basis vectors (0-based).
Subspace coordinate_subspace(const GaloisField& field, unsigned n, const std::vector<unsigned>& coords);

}  // namespace erlab
