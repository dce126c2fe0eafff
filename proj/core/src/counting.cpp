#include "erlab/counting.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_map>

#include "erlab/errors.hpp"
#include "erlab/optimisation.hpp"

namespace erlab {

BigCount PartitionVector::evaluate(unsigned long r) const {
  BigCount total = 0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] != 0) total += a[m] * falling_factorial(r, m);
  }
  return total;
}

namespace {

// Memoised recursion over remaining-vertex masks. Vertex v of the lowest index in the
// remaining set S must share its block with some independent subset of S \ N[v].
class PartitionSolver {
 public:
  explicit PartitionSolver(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  const std::vector<std::uint64_t>& solve(std::uint64_t S) {
    if (auto it = memo_.find(S); it != memo_.end()) return it->second;
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(std::popcount(S)) + 1, 0);
    if (S == 0) {
      acc[0] = 1;
    } else {
      const unsigned v = static_cast<unsigned>(std::countr_zero(S));
      const std::uint64_t rest = S & ~(std::uint64_t{1} << v);
      extend(rest & ~adj_[v], 0, rest, acc);
    }
    return memo_.emplace(S, std::move(acc)).first->second;
  }

 private:
  void extend(std::uint64_t avail, std::uint64_t chosen, std::uint64_t rest,
              std::vector<std::uint64_t>& acc) {
    const auto& sub = solve(rest & ~chosen);
    for (std::size_t m = 0; m < sub.size(); ++m) {
      if (sub[m] == 0) continue;
      if (__builtin_add_overflow(acc[m + 1], sub[m], &acc[m + 1])) {
        throw CapacityError("partition count overflowed 64 bits");
      }
    }
    while (avail != 0) {
      const unsigned u = static_cast<unsigned>(std::countr_zero(avail));
      const std::uint64_t bit = std::uint64_t{1} << u;
      avail &= ~bit;
      extend(avail & ~adj_[u], chosen | bit, rest, acc);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> memo_;
};

}  // namespace

PartitionVector partition_vector(const ConflictGraph& g, unsigned max_subset_bits) {
  const std::size_t n = g.vertex_count();
  if (max_subset_bits > 25) throw ConfigError("the subset cap may not exceed 25 bits");
  if (n > max_subset_bits) {
    throw CapacityError("partition vector needs at most " + std::to_string(max_subset_bits) +
                        " vertices, graph has " + std::to_string(n));
  }
  PartitionSolver solver(g.rows64());
  const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  const auto& raw = solver.solve(all);
  PartitionVector pv;
  pv.a.reserve(raw.size());
  for (auto x : raw) pv.a.emplace_back(static_cast<unsigned long>(x));
  return pv;
}

namespace {

std::uint64_t count_assignments(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                std::size_t n, unsigned r, unsigned first_colour) {
  // The colour of vertex 0 is pinned to first_colour; the rest run through an odometer.
  std::vector<unsigned> colour(n, 0);
  colour[0] = first_colour;
  std::uint64_t good = 0;
  while (true) {
    bool proper = true;
    for (auto [a, b] : edges) {
      if (colour[a] == colour[b]) {
        proper = false;
        break;
      }
    }
    good += proper;
    std::size_t i = n;
    while (i > 1) {
      if (++colour[i - 1] < r) break;
      colour[i - 1] = 0;
      --i;
    }
    if (i <= 1) break;
  }
  return good;
}

}  // namespace

BigCount count_bruteforce(const ConflictGraph& g, unsigned r, const CountingLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  if (r == 0) return 0;
  const BigCount evals = power(BigCount(r), n);
  if (evals > BigCount(static_cast<unsigned long>(limits.max_oracle_evals))) {
    throw CapacityError("brute force needs " + to_decimal(evals) + " evaluations, cap is " +
                        std::to_string(limits.max_oracle_evals));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    g.row(a).for_each([&](std::size_t b) {
      if (a < b) edges.emplace_back(a, b);
    });

  std::vector<std::uint64_t> per_colour(r, 0);
  const unsigned jobs = std::max(1U, std::min(limits.jobs, r));
  if (jobs == 1) {
    for (unsigned c = 0; c < r; ++c) per_colour[c] = count_assignments(edges, n, r, c);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (unsigned c = w; c < r; c += jobs) per_colour[c] = count_assignments(edges, n, r, c);
      });
    }
    for (auto& th : workers) th.join();
  }
  BigCount total = 0;
  for (auto x : per_colour) total += BigCount(static_cast<unsigned long>(x));
  return total;
}

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::PartitionVector: return "partition-vector";
    case CountMethod::BruteForce: return "bruteforce";
    case CountMethod::Mixed: return "mixed";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> connected_components(const ConflictGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> out;
  Bitset unseen = Bitset::full(n);
  while (unseen.any()) {
    const std::size_t start = unseen.first();
    Bitset comp(n);
    Bitset frontier(n);
    frontier.set(start);
    while (frontier.any()) {
      comp |= frontier;
      unseen.subtract(frontier);
      Bitset next(n);
      frontier.for_each([&](std::size_t v) { next |= g.row(v); });
      next &= unseen;
      frontier = next;
    }
    out.push_back(comp.indices());
  }
  return out;
}

CountResult count_colourings(const ConflictGraph& g, unsigned r, const CountingLimits& limits) {
  CountResult res;
  res.count = 1;
  bool used_pv = false;
  bool used_bf = false;
  const auto comps = connected_components(g);
  res.components = comps.size();
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      res.count *= r;
      continue;
    }
    const ConflictGraph sub = g.induced(comp);
    if (comp.size() <= std::min(limits.max_subset_bits, 25U)) {
      res.count *= partition_vector(sub, limits.max_subset_bits).evaluate(r);
      used_pv = true;
      continue;
    }
    const BigCount evals = power(BigCount(r), comp.size());
    if (evals <= BigCount(static_cast<unsigned long>(limits.max_oracle_evals))) {
      res.count *= count_bruteforce(sub, r, limits);
      used_bf = true;
      continue;
    }
    throw CapacityError("a component with " + std::to_string(comp.size()) +
                        " vertices exceeds the subset cap of " + std::to_string(limits.max_subset_bits) +
                        " bits and the brute-force cap of " + std::to_string(limits.max_oracle_evals) +
                        " evaluations");
  }
  res.method = used_bf ? (used_pv ? CountMethod::Mixed : CountMethod::BruteForce) : CountMethod::PartitionVector;
  return res;
}

CountResult count_colourings(const Family& f, unsigned r, unsigned t, const CountingLimits& limits) {
  return count_colourings(build_conflict_graph(f, t), r, limits);
}

ColourPartition::ColourPartition(unsigned r, std::vector<std::vector<unsigned>> parts)
    : r_(r), parts_(std::move(parts)) {
  std::vector<bool> seen(r, false);
  std::size_t total = 0;
  for (const auto& p : parts_) {
    if (p.empty()) throw DomainError("colour partition parts must be nonempty");
    for (auto c : p) {
      if (c >= r) throw DomainError("colour " + std::to_string(c) + " outside [r]");
      if (seen[c]) throw DomainError("colour " + std::to_string(c) + " appears in two parts");
      seen[c] = true;
      ++total;
    }
  }
  if (total != r) throw DomainError("colour partition does not cover [r]");
}

ColourPartition ColourPartition::from_sizes(const std::vector<unsigned>& sizes) {
  std::vector<std::vector<unsigned>> parts;
  unsigned next = 0;
  for (auto s : sizes) {
    std::vector<unsigned> p;
    for (unsigned i = 0; i < s; ++i) p.push_back(next++);
    parts.push_back(std::move(p));
  }
  return ColourPartition(next, std::move(parts));
}

std::vector<unsigned> ColourPartition::sizes() const {
  std::vector<unsigned> out;
  for (const auto& p : parts_) out.push_back(static_cast<unsigned>(p.size()));
  return out;
}

BigCount phi_from_memberships(const std::vector<std::uint64_t>& memberships,
                              const std::vector<unsigned>& part_sizes) {
  if (part_sizes.size() > 64) throw CapacityError("at most 64 stars per union");
  BigCount total = 1;
  for (auto mask : memberships) {
    unsigned choices = 0;
    while (mask != 0) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(mask));
      mask &= mask - 1;
      if (i >= part_sizes.size()) throw DomainError("membership mask names a missing star");
      choices += part_sizes[i];
    }
    total *= choices;
  }
  return total;
}

BigCount count_phi(const std::vector<Family>& stars, const ColourPartition& cp, unsigned t) {
  if (stars.size() != cp.size()) {
    throw DomainError("count_phi needs one colour part per star (" + std::to_string(stars.size()) +
                      " stars, " + std::to_string(cp.size()) + " parts)");
  }
  if (stars.size() > 64) throw CapacityError("at most 64 stars per union");
  if (stars.empty()) return 1;
  std::vector<GroundElement> all;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    if (!(stars[i].universe() == stars[0].universe())) throw DomainError("stars from different universes");
    if (!is_t_intersecting(stars[i], t)) {
      throw DomainError("family " + std::to_string(i) + " is not " + std::to_string(t) + "-intersecting");
    }
    all.insert(all.end(), stars[i].members().begin(), stars[i].members().end());
  }
  const Family uni(stars[0].universe(), std::move(all));
  std::vector<std::uint64_t> masks(uni.size(), 0);
  for (std::size_t i = 0; i < stars.size(); ++i)
    for (const auto& m : stars[i].members()) masks[*uni.index_of(m)] |= std::uint64_t{1} << i;
  return phi_from_memberships(masks, cp.sizes());
}

bool is_proper(const ConflictGraph& g, const ColouringRecord& col) {
  if (col.colour_of.size() != g.vertex_count()) return false;
  for (std::size_t a = 0; a < g.vertex_count(); ++a) {
    bool ok = true;
    g.row(a).for_each([&](std::size_t b) { ok = ok && col.colour_of[a] != col.colour_of[b]; });
    if (!ok) return false;
  }
  return true;
}

bool for_each_colouring(const ConflictGraph& g, unsigned r,
                        const std::function<bool(const std::vector<unsigned>&)>& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<unsigned> colour(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == n) return visit(colour);
    for (unsigned c = 0; c < r; ++c) {
      bool ok = true;
      for (std::size_t u = g.row(v).first(); u < v; u = g.row(v).next(u)) {
        if (colour[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[v] = c;
      if (!rec(v + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

Classification classify_colouring(const Family& f, const ColouringRecord& col, unsigned t,
                                  const MaximalContext& ctx) {
  if (!(f.universe() == ctx.ground.universe())) throw DomainError("census belongs to a different universe");
  if (col.colour_of.size() != f.size()) throw DomainError("colouring length does not match the family");
  unsigned r = 0;
  for (auto c : col.colour_of) r = std::max(r, c + 1);
  r = std::max(r, col.r);

  const std::size_t width = ctx.ground.size();
  Bitset fmask(width);
  std::vector<std::size_t> embed(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto pos = ctx.ground.index_of(f[i]);
    if (!pos) throw DomainError("family member is not in the census ground family");
    embed[i] = *pos;
    fmask.set(*pos);
  }

  std::vector<Bitset> classes(r, Bitset(width));
  for (std::size_t i = 0; i < f.size(); ++i) classes[col.colour_of[i]].set(embed[i]);
  for (unsigned c = 0; c < r; ++c) {
    const auto idx = classes[c].indices();
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        if (intersection_measure(f.universe(), ctx.ground[idx[a]], ctx.ground[idx[b]]) < t) {
          throw DomainError("colour class " + std::to_string(c) + " is not " + std::to_string(t) +
                            "-intersecting");
        }
  }

  std::size_t best_overlap_pos = 0;
  std::size_t best_overlap = 0;
  for (std::size_t j = 0; j < ctx.maximal.size(); ++j) {
    const std::size_t ov = ctx.maximal[j].intersection_count(fmask);
    if (j == 0 || ov > best_overlap) {
      best_overlap = ov;
      best_overlap_pos = j;
    }
  }

  Classification out;
  out.assigned.resize(r);
  for (unsigned c = 0; c < r; ++c) {
    if (classes[c].none()) {
      out.assigned[c] = best_overlap_pos;
      continue;
    }
    std::size_t j = 0;
    while (j < ctx.maximal.size() && !classes[c].is_subset_of(ctx.maximal[j])) ++j;
    if (j == ctx.maximal.size()) throw DomainError("colour class is contained in no listed maximal family");
    out.assigned[c] = j;
  }

  std::vector<std::size_t> distinct = out.assigned;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto j : distinct) {
    out.multiplicities.push_back(
        static_cast<unsigned>(std::count(out.assigned.begin(), out.assigned.end(), j)));
  }
  std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());

  auto fmt = [](const std::vector<unsigned>& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
  };

  if (objective(out.multiplicities) != opt_value(r)) {
    out.witness = "multiplicity vector " + fmt(out.multiplicities) + " is not optimal for r=" + std::to_string(r);
    return out;
  }
  const CensusReport& rep = ctx.report;
  for (auto j : distinct) {
    const std::size_t size = ctx.maximal[j].count();
    if (size != rep.N0) {
      out.witness = "maximal family " + std::to_string(j) + " has size " + std::to_string(size) +
                    ", not the extremal size " + std::to_string(rep.N0);
      return out;
    }
  }
  const std::size_t bound = static_cast<std::size_t>(r) * std::max(rep.N1.value_or(0), rep.N2.value_or(0));
  for (auto j : distinct) {
    const std::size_t ov = ctx.maximal[j].intersection_count(fmask);
    if (ov <= bound) {
      out.witness = "overlap with maximal family " + std::to_string(j) + " is " + std::to_string(ov) +
                    ", not above r*max(N1,N2) = " + std::to_string(bound);
      return out;
    }
  }
  out.verdict = Typicality::Typical;
  return out;
}

}  // namespace erlab
