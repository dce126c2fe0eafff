#include "erlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "erlab/errors.hpp"
#include "erlab/interval.hpp"

namespace erlab {
namespace {

// Bron-Kerbosch with Tomita pivoting on the complement of g: cliques of the complement are
// independent sets of g, so "neighbourhood" below means non-adjacency in g.
class MisEnumerator {
 public:
  MisEnumerator(const ConflictGraph& g, std::size_t cap, std::atomic<std::size_t>& found)
      : n_(g.vertex_count()), cap_(cap), found_(found) {
    comp_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      Bitset nb = Bitset::full(n_);
      nb.subtract(g.row(v));
      nb.reset(v);
      comp_.push_back(std::move(nb));
    }
  }

  const Bitset& nbhd(std::size_t v) const { return comp_[v]; }

  void run(Bitset& R, Bitset P, Bitset X, std::vector<Bitset>& out) {
    if (P.none()) {
      if (X.none()) {
        if (found_.fetch_add(1) + 1 > cap_) {
          throw CapacityError("more than " + std::to_string(cap_) + " maximal families (enumeration stopped after " +
                              std::to_string(cap_) + ")");
        }
        out.push_back(R);
      }
      return;
    }
    // Pivot maximising |P ∩ N(u)| over u in P ∪ X.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    const Bitset PX = P | X;
    PX.for_each([&](std::size_t u) {
      const std::size_t c = P.intersection_count(comp_[u]);
      if (!have || c > best) {
        best = c;
        pivot = u;
        have = true;
      }
    });
    const Bitset candidates = P - comp_[pivot];
    candidates.for_each([&](std::size_t v) {
      R.set(v);
      run(R, P & comp_[v], X & comp_[v], out);
      R.reset(v);
      P.reset(v);
      X.set(v);
    });
  }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::atomic<std::size_t>& found_;
  std::vector<Bitset> comp_;
};

}  // namespace

std::vector<Bitset> maximal_families(const ConflictGraph& g, const CensusLimits& limits) {
  const std::size_t n = g.vertex_count();
  std::atomic<std::size_t> found{0};
  MisEnumerator en(g, limits.max_families, found);
  std::vector<Bitset> out;
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }

  if (limits.jobs <= 1) {
    Bitset R(n);
    en.run(R, Bitset::full(n), Bitset(n), out);
  } else {
    // Unroll the top level without pivoting; each branch is independent given its (P, X).
    struct Task {
      std::size_t v;
      Bitset P;
      Bitset X;
    };
    std::vector<Task> tasks;
    Bitset P = Bitset::full(n);
    Bitset X(n);
    for (std::size_t v = 0; v < n; ++v) {
      tasks.push_back({v, P & en.nbhd(v), X & en.nbhd(v)});
      P.reset(v);
      X.set(v);
    }
    std::vector<std::vector<Bitset>> partial(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          Bitset R(n);
          R.set(tasks[i].v);
          en.run(R, tasks[i].P, tasks[i].X, partial[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!error) error = std::current_exception();
          next = tasks.size();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < limits.jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    for (auto& p : partial)
      for (auto& b : p) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), index_lex_less);
  return out;
}

CensusReport census_stats(const std::vector<Bitset>& maximal, const ConflictGraph& g) {
  if (maximal.empty()) throw DomainError("a census needs at least one maximal family");
  (void)g;
  CensusReport rep;
  rep.M = static_cast<unsigned long>(maximal.size());
  for (const auto& m : maximal) rep.N0 = std::max(rep.N0, m.count());
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    const std::size_t c = maximal[i].count();
    if (c == rep.N0) {
      rep.extremal.push_back(i);
    } else if (!rep.N1 || c > *rep.N1) {
      rep.N1 = c;
      rep.n1_witness = i;
    }
  }
  for (std::size_t a = 0; a < rep.extremal.size(); ++a)
    for (std::size_t b = a + 1; b < rep.extremal.size(); ++b) {
      const std::size_t ov = maximal[rep.extremal[a]].intersection_count(maximal[rep.extremal[b]]);
      if (!rep.N2 || ov > *rep.N2) {
        rep.N2 = ov;
        rep.n2_witness = std::make_pair(rep.extremal[a], rep.extremal[b]);
      }
    }
  return rep;
}

const char* to_string(EmpiricalSign sign) {
  switch (sign) {
    case EmpiricalSign::Positive: return "positive";
    case EmpiricalSign::Negative: return "negative";
    case EmpiricalSign::Inconclusive: return "inconclusive";
    case EmpiricalSign::Inapplicable: return "inapplicable";
  }
  return "?";
}

EmpiricalCheck check_3col_empirical(const CensusReport& report, unsigned max_precision_bits) {
  EmpiricalCheck out;
  if (!report.N1 && !report.N2) return out;
  const std::size_t competitor = std::max(report.N1.value_or(0), report.N2.value_or(0));
  const BigCount gap = BigCount(static_cast<unsigned long>(report.N0)) - BigCount(static_cast<unsigned long>(competitor));
  const auto cert = certify_sign(
      [&](unsigned prec) {
        const CertifiedInterval denom = CertifiedInterval(2L, prec) * lg(CertifiedInterval(3L, prec)) -
                                        CertifiedInterval(3L, prec);
        return CertifiedInterval(gap, prec) -
               CertifiedInterval(6L, prec) * lg(CertifiedInterval(report.M, prec)) / denom;
      },
      max_precision_bits);
  out.lo = cert.enclosure.lo();
  out.hi = cert.enclosure.hi();
  out.sign = cert.sign == Sign::Positive   ? EmpiricalSign::Positive
             : cert.sign == Sign::Negative ? EmpiricalSign::Negative
                                           : EmpiricalSign::Inconclusive;
  return out;
}

MaximalContext MaximalContext::of(const Family& ground, unsigned t, const CensusLimits& limits) {
  MaximalContext ctx;
  ctx.ground = ground;
  const ConflictGraph g = build_conflict_graph(ground, t);
  ctx.maximal = maximal_families(g, limits);
  ctx.report = census_stats(ctx.maximal, g);
  return ctx;
}

}  // namespace erlab
