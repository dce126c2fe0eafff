#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "erlab/bitset.hpp"
#include "erlab/ground.hpp"

namespace erlab {

/// Immutable, sorted, duplicate-free collection of elements of one universe.
/// Member positions are the vertex ids used by conflict graphs, census and search.
class Family {
 public:
  Family() = default;
  Family(Universe universe, std::vector<GroundElement> members);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<GroundElement>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const GroundElement& operator[](std::size_t i) const { return members_[i]; }

  /// How many repeated inputs the constructor dropped.
  std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

  std::optional<std::size_t> index_of(const GroundElement& e) const;
  Family subfamily(const Bitset& selection) const;
  Family subfamily(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  Universe universe_;
  std::vector<GroundElement> members_;
  std::size_t duplicates_removed_ = 0;
};

Family full_family(const Universe& u, std::size_t cap = kDefaultEnumerationCap);

/// Symmetric, loop-free graph stored as one bit row per vertex.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::size_t vertex_count, unsigned t = 0);

  static ConflictGraph from_edges(std::size_t vertex_count,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  unsigned t() const noexcept { return t_; }
  const std::optional<Universe>& universe() const noexcept { return universe_; }
  void set_universe(Universe u) { universe_ = std::move(u); }

  const Bitset& row(std::size_t v) const { return rows_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  void add_edge(std::size_t a, std::size_t b);
  void remove_edge(std::size_t a, std::size_t b);

  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  bool edgeless() const;

  /// Subgraph on the given vertices, renumbered in the order given.
  ConflictGraph induced(const std::vector<std::size_t>& vertices) const;
  ConflictGraph induced(const Bitset& vertices) const;

  /// Single-word adjacency rows; requires vertex_count() <= 64.
  std::vector<std::uint64_t> rows64() const;

 private:
  std::vector<Bitset> rows_;
  unsigned t_ = 0;
  std::optional<Universe> universe_;
};

/// Edge between two members iff their intersection measure is below t.
/// Throws DomainError unless 1 <= t <= k (t <= n for permutations).
ConflictGraph build_conflict_graph(const Family& f, unsigned t);
bool is_t_intersecting(const Family& f, unsigned t);
void check_threshold(const Universe& u, unsigned t);

}  // namespace erlab
