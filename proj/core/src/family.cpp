#include "erlab/family.hpp"

#include <algorithm>
#include <string>

#include "erlab/errors.hpp"

namespace erlab {

Family::Family(Universe universe, std::vector<GroundElement> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  universe_.validate();
  for (const auto& m : members_) universe_.validate(m);
  std::sort(members_.begin(), members_.end());
  const auto before = members_.size();
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  duplicates_removed_ = before - members_.size();
}

std::optional<std::size_t> Family::index_of(const GroundElement& e) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

Family Family::subfamily(const Bitset& selection) const {
  return subfamily(selection.indices());
}

Family Family::subfamily(const std::vector<std::size_t>& indices) const {
  std::vector<GroundElement> picked;
  picked.reserve(indices.size());
  for (auto i : indices) {
    if (i >= members_.size()) throw DomainError("member index out of range");
    picked.push_back(members_[i]);
  }
  return Family(universe_, std::move(picked));
}

Family full_family(const Universe& u, std::size_t cap) {
  return Family(u, enumerate_elements(u, cap));
}

ConflictGraph::ConflictGraph(std::size_t vertex_count, unsigned t)
    : rows_(vertex_count, Bitset(vertex_count)), t_(t) {}

ConflictGraph ConflictGraph::from_edges(std::size_t vertex_count,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  ConflictGraph g(vertex_count);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

void ConflictGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= rows_.size() || b >= rows_.size()) throw DomainError("edge endpoint out of range");
  if (a == b) throw DomainError("conflict graphs have no self-loops");
  rows_[a].set(b);
  rows_[b].set(a);
}

void ConflictGraph::remove_edge(std::size_t a, std::size_t b) {
  rows_[a].reset(b);
  rows_[b].reset(a);
}

std::size_t ConflictGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

bool ConflictGraph::edgeless() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Bitset& r) { return r.none(); });
}

ConflictGraph ConflictGraph::induced(const std::vector<std::size_t>& vertices) const {
  ConflictGraph g(vertices.size(), t_);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (rows_[vertices[i]].test(vertices[j])) g.add_edge(i, j);
  return g;
}

ConflictGraph ConflictGraph::induced(const Bitset& vertices) const {
  return induced(vertices.indices());
}

std::vector<std::uint64_t> ConflictGraph::rows64() const {
  if (rows_.size() > 64) throw CapacityError("single-word rows need at most 64 vertices");
  std::vector<std::uint64_t> out(rows_.size(), 0);
  for (std::size_t v = 0; v < rows_.size(); ++v) out[v] = rows_[v].size() ? rows_[v].word(0) : 0;
  return out;
}

void check_threshold(const Universe& u, unsigned t) {
  const unsigned limit = u.full_measure();
  if (t < 1 || t > limit) {
    throw DomainError("t=" + std::to_string(t) + " must lie in [1, " + std::to_string(limit) + "]");
  }
}

ConflictGraph build_conflict_graph(const Family& f, unsigned t) {
  const Universe& u = f.universe();
  check_threshold(u, t);
  ConflictGraph g(f.size(), t);
  g.set_universe(u);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (intersection_measure(u, f[i], f[j]) < t) g.add_edge(i, j);
  return g;
}

bool is_t_intersecting(const Family& f, unsigned t) {
  check_threshold(f.universe(), t);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (intersection_measure(f.universe(), f[i], f[j]) < t) return false;
  return true;
}

}  // namespace erlab
