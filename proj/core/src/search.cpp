#include "erlab/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "erlab/errors.hpp"

namespace erlab {

const char* to_string(SearchMethod m) {
  return m == SearchMethod::AllSubfamilies ? "all-subfamilies" : "unions-of-maximal";
}

namespace {

// Counts proper colourings of induced subgraphs given by vertex masks, caching per component.
class MaskCounter {
 public:
  MaskCounter(const ConflictGraph& g, unsigned r, const CountingLimits& limits)
      : g_(g), adj_(g.rows64()), r_(r), limits_(limits) {}

  BigCount count(std::uint64_t mask) {
    BigCount total = 1;
    std::uint64_t rest = mask;
    while (rest != 0) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= mask & ~comp;
        comp |= next;
        frontier = next;
      }
      rest &= ~comp;
      if ((comp & (comp - 1)) == 0) {
        total *= r_;
      } else {
        total *= component(comp);
      }
    }
    return total;
  }

 private:
  const BigCount& component(std::uint64_t comp) {
    if (auto it = cache_.find(comp); it != cache_.end()) return it->second;
    std::vector<std::size_t> verts;
    for (std::uint64_t m = comp; m != 0; m &= m - 1) verts.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    const BigCount value = count_colourings(g_.induced(verts), r_, limits_).count;
    return cache_.emplace(comp, value).first->second;
  }

  const ConflictGraph& g_;
  std::vector<std::uint64_t> adj_;
  unsigned r_;
  CountingLimits limits_;
  std::unordered_map<std::uint64_t, BigCount> cache_;
};

std::vector<std::uint8_t> degree_signature(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  std::vector<std::uint8_t> sig;
  for (std::uint64_t m = mask; m != 0; m &= m - 1)
    sig.push_back(static_cast<std::uint8_t>(std::popcount(adj[std::countr_zero(m)] & mask)));
  std::sort(sig.begin(), sig.end());
  return sig;
}

Bitset mask_to_bitset(std::uint64_t mask, std::size_t n) {
  Bitset b(n);
  for (std::uint64_t m = mask; m != 0; m &= m - 1) b.set(static_cast<std::size_t>(std::countr_zero(m)));
  return b;
}

struct Partial {
  BigCount best = 0;
  std::vector<std::uint64_t> argmax;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

void consider(Partial& p, std::uint64_t mask, const BigCount& c) {
  if (c > p.best) {
    p.best = c;
    p.argmax.clear();
  }
  if (c == p.best) p.argmax.push_back(mask);
}

void verify_argmax(const ConflictGraph& g, unsigned r, const CountingLimits& limits, SearchResult& res) {
  for (const auto& fam : res.argmax) {
    const BigCount evals = power(BigCount(r), fam.count());
    if (evals > BigCount(static_cast<unsigned long>(limits.max_oracle_evals))) continue;
    const BigCount check = count_bruteforce(g.induced(fam), r, limits);
    if (check != res.max_count) {
      throw Error("brute-force recount disagrees with the search count (" + to_decimal(check) + " vs " +
                  to_decimal(res.max_count) + ")");
    }
    ++res.verified;
  }
}

}  // namespace

SearchResult exhaustive_optimal(const Family& ground, unsigned t, unsigned r, const SearchOptions& opt) {
  const std::size_t n = ground.size();
  if (n > opt.max_ground || n > 62) {
    throw CapacityError("exhaustive search covers at most " + std::to_string(std::min<unsigned>(opt.max_ground, 62)) +
                        " members, ground family has " + std::to_string(n) + "; use the unions-of-maximal search");
  }
  const ConflictGraph g = n == 0 ? ConflictGraph(0, t) : build_conflict_graph(ground, t);
  const std::vector<std::uint64_t> adj = g.rows64();

  const bool parallel = opt.jobs > 1 && !opt.degree_pruning && n >= 4;
  const unsigned prefix_bits = parallel ? std::min<unsigned>(static_cast<unsigned>(n) / 2, 6) : 0;
  const unsigned low_bits = static_cast<unsigned>(n) - prefix_bits;
  const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
  const std::uint64_t span = std::uint64_t{1} << low_bits;

  auto run = [&](std::uint64_t first_prefix, std::uint64_t stride, Partial& part) {
    MaskCounter counter(g, r, opt.counting);
    std::set<std::vector<std::uint8_t>> seen;
    for (std::uint64_t p = first_prefix; p < prefixes; p += stride) {
      for (std::uint64_t i = 0; i < span; ++i) {
        const std::uint64_t mask = (p << low_bits) | (i ^ (i >> 1));  // Gray order within the block
        ++part.examined;
        if (opt.degree_pruning && !seen.insert(degree_signature(adj, mask)).second) {
          ++part.pruned;
          continue;
        }
        consider(part, mask, counter.count(mask));
      }
    }
  };

  std::vector<Partial> parts(parallel ? opt.jobs : 1);
  if (!parallel) {
    run(0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex m;
    for (unsigned w = 0; w < opt.jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          run(w, opt.jobs, parts[w]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  SearchResult res;
  res.method = SearchMethod::AllSubfamilies;
  for (const auto& p : parts) {
    res.families_examined += BigCount(static_cast<unsigned long>(p.examined));
    res.families_pruned += BigCount(static_cast<unsigned long>(p.pruned));
    if (p.best > res.max_count) res.max_count = p.best;
  }
  for (const auto& p : parts)
    if (p.best == res.max_count)
      for (auto mask : p.argmax) res.argmax.push_back(mask_to_bitset(mask, n));
  std::sort(res.argmax.begin(), res.argmax.end(), index_lex_less);
  verify_argmax(g, r, opt.counting, res);
  return res;
}

SearchResult exhaustive_optimal(const Universe& u, unsigned t, unsigned r, const SearchOptions& opt) {
  check_threshold(u, t);
  const BigCount size = u.element_count();
  if (size > BigCount(opt.max_ground)) {
    throw CapacityError("universe " + u.describe() + " has " + to_decimal(size) + " members, above the " +
                        std::to_string(opt.max_ground) + "-member exhaustive cap; use the unions-of-maximal search");
  }
  return exhaustive_optimal(full_family(u), t, r, opt);
}

SearchResult unions_of_maximal_search(const Universe& u, unsigned t, unsigned r, unsigned max_parts,
                                      const SearchOptions& opt) {
  if (max_parts < 1) throw DomainError("max_parts must be at least 1");
  const Family ground = full_family(u);
  const ConflictGraph g = build_conflict_graph(ground, t);
  const auto maximal = maximal_families(g, opt.census);
  const std::size_t M = maximal.size();

  BigCount candidates = 0;
  for (unsigned j = 1; j <= max_parts && j <= M; ++j) candidates += binomial(static_cast<long>(M), j);
  if (candidates > BigCount(static_cast<unsigned long>(opt.union_budget))) {
    throw CapacityError(to_decimal(candidates) + " candidate unions of " + std::to_string(M) +
                        " maximal families exceed the budget of " + std::to_string(opt.union_budget));
  }

  SearchResult res;
  res.method = SearchMethod::UnionsOfMaximal;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, const Bitset&)> rec = [&](std::size_t from, const Bitset& acc) {
    if (!pick.empty()) {
      const auto idx = acc.indices();
      if (seen.insert(idx).second) {
        res.families_examined += 1;
        const BigCount c = count_colourings(g.induced(idx), r, opt.counting).count;
        if (c > res.max_count) {
          res.max_count = c;
          res.argmax.clear();
        }
        if (c == res.max_count) res.argmax.push_back(acc);
      }
    }
    if (pick.size() == max_parts) return;
    for (std::size_t j = from; j < M; ++j) {
      pick.push_back(j);
      rec(j + 1, acc | maximal[j]);
      pick.pop_back();
    }
  };
  rec(0, Bitset(ground.size()));
  std::sort(res.argmax.begin(), res.argmax.end(), index_lex_less);
  verify_argmax(g, r, opt.counting, res);
  return res;
}

std::vector<Composition> optimal_size_vectors(unsigned r, unsigned s) {
  std::vector<Composition> out;
  const BigCount best = opt_value(r);
  for (auto m : partitions(r)) {
    if (m.size() != s || objective(m) != best) continue;
    std::sort(m.begin(), m.end());
    do {
      out.push_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigCount labelled_partitions(const Composition& sizes) {
  unsigned long r = 0;
  BigCount den = 1;
  for (auto m : sizes) {
    r += m;
    den *= factorial(m);
  }
  BigCount out = factorial(r);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigCount optimal_partition_count(unsigned r, unsigned s, bool generate) {
  BigCount total = 0;
  for (const auto& sizes : optimal_size_vectors(r, s)) {
    if (!generate) {
      total += labelled_partitions(sizes);
      continue;
    }
    std::vector<unsigned> room = sizes;
    std::uint64_t leaves = 0;
    std::function<void(unsigned)> rec = [&](unsigned colour) {
      if (colour == r) {
        ++leaves;
        return;
      }
      for (auto& slot : room) {
        if (slot == 0) continue;
        --slot;
        rec(colour + 1);
        ++slot;
      }
    };
    rec(0);
    total += BigCount(static_cast<unsigned long>(leaves));
  }
  return total;
}

namespace {

void check_centres(unsigned n, unsigned k, unsigned t, const std::vector<KSet>& centres) {
  if (!(1 <= t && t < k && k <= n)) throw DomainError("need 1 <= t < k <= n");
  for (const auto& c : centres) {
    if (std::popcount(c.mask) != static_cast<int>(t)) throw DomainError("every centre must have exactly t elements");
    if (n < 64 && (c.mask >> n) != 0) throw DomainError("centre lies outside [n]");
  }
}

UnionResult set_union(unsigned n, unsigned k, const std::vector<KSet>& centres) {
  const Universe u = Universe::sets(n, k);
  UnionSpec spec;
  for (const auto& c : centres) spec.stars.push_back(StarSpec{u, c});
  return union_of_stars(spec);
}

}  // namespace

SwapReport compare_star_swap(unsigned n, unsigned k, unsigned t, unsigned r, const std::vector<KSet>& before,
                             std::size_t swap_index, const KSet& after) {
  check_centres(n, k, t, before);
  check_centres(n, k, t, {after});
  if (before.size() < 2) throw DomainError("star swap needs at least two stars");
  if (swap_index >= before.size()) throw DomainError("swap index out of range");
  if (r < 5) throw DomainError("hypothesis r >= 5 fails");
  if (n < k + r * t) throw DomainError("hypothesis n >= k + r t fails");
  for (std::size_t i = 0; i < before.size(); ++i)
    for (std::size_t j = i + 1; j < before.size(); ++j)
      if (before[i] == before[j]) throw DomainError("stars must be distinct");
  const auto sizes = optimal_size_vectors(r, static_cast<unsigned>(before.size()));
  if (sizes.empty()) {
    throw DomainError("the number of stars must be ceil(r/3), or floor(r/3) when r = 1 mod 3");
  }
  SwapReport rep;
  const unsigned need = static_cast<unsigned>(std::max(1, 2 * static_cast<int>(t) - static_cast<int>(k)));
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (i != swap_index && static_cast<unsigned>(std::popcount(before[i].mask & before[swap_index].mask)) >= need)
      rep.partners.push_back(i);
  }
  if (rep.partners.empty()) {
    throw DomainError("hypothesis fails: no centre meets the swapped centre in at least max(1, 2t-k) = " +
                      std::to_string(need) + " elements");
  }
  std::uint64_t all = 0;
  for (const auto& c : before) all |= c.mask;
  if (after.mask & all) throw DomainError("hypothesis fails: the replacement centre must avoid every centre");

  std::vector<KSet> swapped = before;
  swapped[swap_index] = after;
  const UnionResult F = set_union(n, k, before);
  const UnionResult Ft = set_union(n, k, swapped);

  rep.holds = true;
  bool first = true;
  rep.partitions = 0;
  for (const auto& sz : sizes) {
    SwapRow row;
    row.sizes = sz;
    row.phi_before = phi_from_memberships(F.memberships, sz);
    row.phi_after = phi_from_memberships(Ft.memberships, sz);
    row.ratio = Rational(row.phi_after, row.phi_before);
    row.ratio.canonicalize();
    row.exceptional = sz[swap_index] == 2 &&
                      std::all_of(rep.partners.begin(), rep.partners.end(), [&](std::size_t i) { return sz[i] == 2; });
    row.holds = row.exceptional ? row.ratio >= 1 : row.ratio >= Rational(6, 5);
    rep.holds = rep.holds && row.holds;
    if (first || row.ratio < rep.min_ratio) rep.min_ratio = row.ratio;
    first = false;
    rep.partitions += labelled_partitions(sz);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

FourVsTwoTwoReport compare_4v22(unsigned n, unsigned k, unsigned t, unsigned r, const std::vector<KSet>& centres) {
  if (r < 7 || r % 3 != 1) throw DomainError("the 4 vs 2+2 comparison needs r >= 7 with r = 1 mod 3");
  check_centres(n, k, t, centres);
  const unsigned s = (r + 2) / 3;
  if (centres.size() != s) {
    throw DomainError("expected ceil(r/3) = " + std::to_string(s) + " centres, got " + std::to_string(centres.size()));
  }
  const int limit = std::max(0, 2 * static_cast<int>(t) - static_cast<int>(k) - 1);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (std::popcount(centres[i].mask & centres[j].mask) > limit) {
        throw DomainError("centres " + std::to_string(i) + " and " + std::to_string(j) + " share more than " +
                          std::to_string(limit) + " elements");
      }
  FourVsTwoTwoReport rep;
  rep.before_sizes.assign(s - 1, 3);
  rep.before_sizes[0] = 4;
  rep.after_sizes.assign(s, 3);
  rep.after_sizes.front() = 2;
  rep.after_sizes.back() = 2;
  const std::vector<KSet> first(centres.begin(), centres.end() - 1);
  rep.phi_before = phi_from_memberships(set_union(n, k, first).memberships, rep.before_sizes);
  rep.phi_after = phi_from_memberships(set_union(n, k, centres).memberships, rep.after_sizes);
  rep.holds = rep.phi_after >= rep.phi_before;
  return rep;
}

TypicalityReport typicality_report(const Family& f, unsigned r, unsigned t, const SearchOptions& opt,
                                   CensusScope scope, const UnionResult* stars) {
  const ConflictGraph g = build_conflict_graph(f, t);
  const BigCount evals = power(BigCount(r), f.size());
  if (evals > BigCount(static_cast<unsigned long>(opt.counting.max_oracle_evals))) {
    throw CapacityError("typicality enumeration needs r^|F| = " + to_decimal(evals) + " within the oracle cap of " +
                        std::to_string(opt.counting.max_oracle_evals));
  }
  const MaximalContext ctx = scope == CensusScope::Family ? MaximalContext::of(f, t, opt.census)
                                                          : MaximalContext::of(full_family(f.universe()), t, opt.census);
  TypicalityReport rep;
  rep.census = ctx.report;
  std::uint64_t typical = 0, atypical = 0;
  ColouringRecord col;
  col.r = r;
  for_each_colouring(g, r, [&](const std::vector<unsigned>& c) {
    col.colour_of = c;
    if (classify_colouring(f, col, t, ctx).verdict == Typicality::Typical) ++typical;
    else ++atypical;
    return true;
  });
  rep.typical = static_cast<unsigned long>(typical);
  rep.atypical = static_cast<unsigned long>(atypical);
  rep.total = rep.typical + rep.atypical;
  if (stars) {
    if (!(stars->family == f)) throw DomainError("star data does not describe this family");
    BigCount sum = 0, best = 0;
    for (const auto& sz : optimal_size_vectors(r, static_cast<unsigned>(stars->stars.size()))) {
      const BigCount phi = phi_from_memberships(stars->memberships, sz);
      sum += labelled_partitions(sz) * phi;
      if (phi > best) best = phi;
    }
    rep.phi_sum = sum;
    rep.phi_max = best;
    rep.sandwich = sum >= rep.typical && rep.typical >= best;
  }
  return rep;
}

}  // namespace erlab
