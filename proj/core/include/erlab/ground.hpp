#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "erlab/bigint.hpp"
#include "erlab/field.hpp"

namespace erlab {

enum class Setting { Sets, Vectors, Permutations };

std::string to_string(Setting setting);

/// A k-subset of [n]; bit i stands for element i + 1. Numeric order on masks is colex order.
struct KSet {
  std::uint64_t mask = 0;
  friend auto operator<=>(const KSet&, const KSet&) = default;
};

/// A subspace of GF(q)^cols held as its reduced row-echelon basis (dim x cols, row-major).
struct Subspace {
  unsigned dim = 0;
  unsigned cols = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t at(unsigned row, unsigned col) const { return entries[row * cols + col]; }
  std::vector<unsigned> pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Pivot columns first, then entries.
  friend bool operator<(const Subspace& a, const Subspace& b);
};

/// A permutation of [n] stored 0-based: image[i] is the image of i.
struct Permutation {
  std::vector<std::uint8_t> image;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

using GroundElement = std::variant<KSet, Subspace, Permutation>;

struct Universe {
  Setting setting = Setting::Sets;
  unsigned n = 0;
  unsigned k = 0;  // unused for permutations
  FieldPtr field;  // Vectors only

  static Universe sets(unsigned n, unsigned k);
  static Universe vectors(FieldPtr field, unsigned n, unsigned k);
  static Universe permutations(unsigned n);

  /// The measure of an element against itself: k, or n for permutations.
  unsigned full_measure() const noexcept { return setting == Setting::Permutations ? n : k; }
  BigCount element_count() const;
  /// Throws DomainError when the descriptor is inconsistent.
  void validate() const;
  /// Throws DomainError when e is not a valid element of this universe.
  void validate(const GroundElement& e) const;
  std::string describe() const;

  friend bool operator==(const Universe& a, const Universe& b);
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// k-dimensional subspaces of GF(q)^n. Throws DomainError unless 0 <= k <= n.
BigCount gaussian_binomial(long n, long k, unsigned long q);

/// Every element of u in canonical order. Throws CapacityError if there are more than cap.
std::vector<GroundElement> enumerate_elements(const Universe& u,
                                              std::size_t cap = kDefaultEnumerationCap);

unsigned intersection_measure(const Universe& u, const GroundElement& a, const GroundElement& b);

/// Canonical form of the row space of the given rows (any number, each of length cols).
Subspace row_space(const GaloisField& field, unsigned cols,
                   const std::vector<std::vector<std::uint8_t>>& rows);
unsigned rank(const GaloisField& field, unsigned cols,
              const std::vector<std::vector<std::uint8_t>>& rows);
std::vector<std::vector<std::uint8_t>> basis_rows(const Subspace& s);
/// Rank of all basis rows stacked; the dimension of the span of the given subspaces.
unsigned subspace_span_dim(const Universe& u, const std::vector<GroundElement>& centres);
unsigned span_dim(const GaloisField& field, const std::vector<Subspace>& parts);
bool subspace_contains(const GaloisField& field, const Subspace& big, const Subspace& small);
/// Whether the vector lies in s.
bool subspace_contains(const GaloisField& field, const Subspace& s, const std::vector<std::uint8_t>& v);

KSet kset_from_elements(const std::vector<unsigned>& one_based);
std::vector<unsigned> kset_elements(const KSet& s);

}  // namespace erlab
