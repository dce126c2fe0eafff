#include "erlab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "erlab/errors.hpp"

namespace erlab {

unsigned StarSpec::t() const {
  return std::visit(
      [](const auto& c) -> unsigned {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, KSet>) return static_cast<unsigned>(std::popcount(c.mask));
        else if constexpr (std::is_same_v<C, Subspace>) return c.dim;
        else return static_cast<unsigned>(c.pairs.size());
      },
      centre);
}

void StarSpec::validate() const {
  universe.validate();
  switch (universe.setting) {
    case Setting::Sets: {
      const auto* c = std::get_if<KSet>(&centre);
      if (!c) throw DomainError("set stars need a set centre");
      if (universe.n < 64 && (c->mask >> universe.n) != 0) throw DomainError("centre lies outside [n]");
      if (t() > universe.k) throw DomainError("centre is larger than k");
      break;
    }
    case Setting::Vectors: {
      const auto* c = std::get_if<Subspace>(&centre);
      if (!c) throw DomainError("vector stars need a subspace centre");
      if (c->cols != universe.n) throw DomainError("centre lives outside the ambient space");
      if (c->dim > universe.k) throw DomainError("centre dimension exceeds k");
      if (!(row_space(*universe.field, c->cols, basis_rows(*c)) == *c))
        throw DomainError("centre is not in reduced echelon form");
      break;
    }
    case Setting::Permutations: {
      const auto* c = std::get_if<PermCentre>(&centre);
      if (!c) throw DomainError("permutation stars need (index, value) pairs");
      std::vector<bool> idx(universe.n, false), val(universe.n, false);
      for (auto [i, v] : c->pairs) {
        if (i >= universe.n || v >= universe.n) throw DomainError("centre pair outside [n]");
        if (idx[i] || val[v]) throw DomainError("centre pairs repeat an index or a value");
        idx[i] = val[v] = true;
      }
      break;
    }
  }
}

namespace {

// Deposit the low bits of x into the set positions of mask (software pdep).
std::uint64_t deposit(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask != 0 && x != 0) {
    const std::uint64_t low = mask & (~mask + 1);
    if (x & 1) out |= low;
    x >>= 1;
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Family star(const StarSpec& spec) {
  spec.validate();
  const Universe& u = spec.universe;
  std::vector<GroundElement> members;
  switch (u.setting) {
    case Setting::Sets: {
      const std::uint64_t c = std::get<KSet>(spec.centre).mask;
      const std::uint64_t all = u.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << u.n) - 1;
      const std::uint64_t free = all & ~c;
      const unsigned extra = u.k - spec.t();
      for (const auto& e : enumerate_elements(Universe::sets(u.n - spec.t(), extra), SIZE_MAX)) {
        members.emplace_back(KSet{c | deposit(std::get<KSet>(e).mask, free)});
      }
      break;
    }
    case Setting::Vectors: {
      const auto& T = std::get<Subspace>(spec.centre);
      const GaloisField& f = *u.field;
      const auto piv = T.pivots();
      std::vector<unsigned> comp;
      for (unsigned c = 0; c < u.n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) comp.push_back(c);
      // Supersets of T correspond to (k - t)-subspaces of the coordinate complement.
      const Universe quotient = Universe::vectors(u.field, u.n - T.dim, u.k - T.dim);
      const auto trows = basis_rows(T);
      for (const auto& e : enumerate_elements(quotient, SIZE_MAX)) {
        auto rows = trows;
        for (const auto& r : basis_rows(std::get<Subspace>(e))) {
          std::vector<std::uint8_t> lifted(u.n, 0);
          for (std::size_t j = 0; j < comp.size(); ++j) lifted[comp[j]] = r[j];
          rows.push_back(std::move(lifted));
        }
        members.emplace_back(row_space(f, u.n, rows));
      }
      break;
    }
    case Setting::Permutations: {
      const auto& c = std::get<PermCentre>(spec.centre);
      std::vector<int> fixed(u.n, -1);
      std::vector<bool> used(u.n, false);
      for (auto [i, v] : c.pairs) {
        fixed[i] = static_cast<int>(v);
        used[v] = true;
      }
      std::vector<std::uint8_t> rest;
      for (unsigned v = 0; v < u.n; ++v)
        if (!used[v]) rest.push_back(static_cast<std::uint8_t>(v));
      do {
        Permutation p;
        p.image.resize(u.n);
        std::size_t next = 0;
        for (unsigned i = 0; i < u.n; ++i)
          p.image[i] = fixed[i] >= 0 ? static_cast<std::uint8_t>(fixed[i]) : rest[next++];
        members.emplace_back(std::move(p));
      } while (std::next_permutation(rest.begin(), rest.end()));
      break;
    }
  }
  return Family(u, std::move(members));
}

unsigned centre_intersection(const Universe& u, const Centre& a, const Centre& b) {
  switch (u.setting) {
    case Setting::Sets:
      return static_cast<unsigned>(std::popcount(std::get<KSet>(a).mask & std::get<KSet>(b).mask));
    case Setting::Vectors: {
      const auto& x = std::get<Subspace>(a);
      const auto& y = std::get<Subspace>(b);
      return x.dim + y.dim - span_dim(*u.field, {x, y});
    }
    case Setting::Permutations: {
      unsigned common = 0;
      for (const auto& p : std::get<PermCentre>(a).pairs)
        common += static_cast<unsigned>(
            std::count(std::get<PermCentre>(b).pairs.begin(), std::get<PermCentre>(b).pairs.end(), p));
      return common;
    }
  }
  return 0;
}

UnionResult union_of_stars(const UnionSpec& spec) {
  if (spec.stars.empty()) throw DomainError("a union needs at least one star");
  if (spec.stars.size() > 64) throw CapacityError("at most 64 stars per union");
  const Universe& u = spec.stars.front().universe;
  for (const auto& s : spec.stars) {
    if (!(s.universe == u)) throw DomainError("stars come from different universes");
    s.validate();
  }
  if (spec.pattern) {
    const auto& pat = *spec.pattern;
    if (pat.size() != spec.stars.size()) throw DomainError("pattern size does not match the number of stars");
    for (std::size_t i = 0; i < pat.size(); ++i) {
      if (pat[i].size() != spec.stars.size()) throw DomainError("pattern rows must be square");
      for (std::size_t j = 0; j < pat.size(); ++j) {
        if (i == j) continue;
        const unsigned actual = centre_intersection(u, spec.stars[i].centre, spec.stars[j].centre);
        if (actual != pat[i][j]) {
          throw DomainError("centres " + std::to_string(i) + " and " + std::to_string(j) + " intersect in " +
                            std::to_string(actual) + ", pattern requires " + std::to_string(pat[i][j]));
        }
      }
    }
  }
  UnionResult out;
  std::vector<GroundElement> all;
  for (const auto& s : spec.stars) {
    out.stars.push_back(star(s));
    all.insert(all.end(), out.stars.back().members().begin(), out.stars.back().members().end());
  }
  out.family = Family(u, std::move(all));
  out.memberships.assign(out.family.size(), 0);
  for (std::size_t i = 0; i < out.stars.size(); ++i)
    for (const auto& m : out.stars[i].members()) out.memberships[*out.family.index_of(m)] |= std::uint64_t{1} << i;
  return out;
}

MultiplicityProfile multiplicity_profile(const UnionResult& u) {
  MultiplicityProfile p;
  p.correction = 1;
  for (auto mask : u.memberships) {
    const unsigned m = static_cast<unsigned>(std::popcount(mask));
    ++p.histogram[m];
    if (m > 1) {
      BigCount den = power(BigCount(3), m - 1);
      p.correction *= Rational(BigCount(m), den);
    }
  }
  p.correction.canonicalize();
  return p;
}

MultiplicityProfile multiplicity_profile(const UnionSpec& spec) { return multiplicity_profile(union_of_stars(spec)); }

Subspace coordinate_subspace(const GaloisField& field, unsigned n, const std::vector<unsigned>& coords) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (auto c : coords) {
    if (c >= n) throw DomainError("coordinate outside the ambient space");
    std::vector<std::uint8_t> row(n, 0);
    row[c] = 1;
    rows.push_back(std::move(row));
  }
  return row_space(field, n, rows);
}

namespace {

void check_config(const GaloisField& f, unsigned t, unsigned s, unsigned n) {
  if (t < 1) throw DomainError("centres need t >= 1");
  if (s < 1) throw DomainError("at least one centre is needed");
  if (n < 2 * t) throw DomainError("W needs n >= 2t");
  if (f.order() + 1 < s) throw DomainError("greedy feasibility requires q ≥ s−1");
}

Subspace first_coordinates(const GaloisField& f, unsigned n, unsigned count) {
  std::vector<unsigned> coords(count);
  std::iota(coords.begin(), coords.end(), 0U);
  return coordinate_subspace(f, n, coords);
}

}  // namespace

CentreConfiguration greedy_centres_in_W(FieldPtr field, unsigned t, unsigned s, unsigned n) {
  const GaloisField& f = *field;
  check_config(f, t, s, n);
  CentreConfiguration cfg;
  cfg.W = first_coordinates(f, n, 2 * t);
  const unsigned q = f.order();
  std::size_t total = 1;
  for (unsigned i = 0; i < 2 * t; ++i) total *= q;

  auto vector_at = [&](std::size_t index) {
    // index written in base q, first coordinate most significant.
    std::vector<std::uint8_t> v(n, 0);
    for (unsigned c = 2 * t; c-- > 0;) {
      v[c] = static_cast<std::uint8_t>(index % q);
      index /= q;
    }
    return v;
  };

  for (unsigned i = 0; i < s; ++i) {
    std::vector<std::vector<std::uint8_t>> urows;
    for (unsigned d = 0; d < t; ++d) {
      const Subspace U = row_space(f, n, urows);
      std::vector<Subspace> blocked;  // T_j + U for every earlier centre
      for (const auto& T : cfg.centres) {
        auto rows = basis_rows(T);
        rows.insert(rows.end(), urows.begin(), urows.end());
        blocked.push_back(row_space(f, n, rows));
      }
      bool placed = false;
      for (std::size_t idx = 1; idx < total && !placed; ++idx) {
        const auto v = vector_at(idx);
        if (subspace_contains(f, U, v)) continue;
        bool ok = true;
        for (const auto& B : blocked) {
          if (subspace_contains(f, B, v)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        urows.push_back(v);
        placed = true;
      }
      if (!placed) throw DomainError("greedy construction ran out of vectors in W");
    }
    cfg.centres.push_back(row_space(f, n, urows));
  }
  return cfg;
}

CentreConfiguration orthogonal_sum_centres(FieldPtr field, unsigned t, unsigned s, unsigned n) {
  const GaloisField& f = *field;
  if (f.order() + 1 < s) throw DomainError("each 2-dimensional block has only q+1 lines, fewer than s");
  check_config(f, t, s, n);
  CentreConfiguration cfg;
  cfg.W = first_coordinates(f, n, 2 * t);
  for (unsigned i = 0; i < s; ++i) {
    std::vector<std::vector<std::uint8_t>> rows;
    for (unsigned block = 0; block < t; ++block) {
      std::vector<std::uint8_t> row(n, 0);
      if (i < f.order()) {
        row[2 * block] = 1;
        row[2 * block + 1] = static_cast<std::uint8_t>(i);
      } else {
        row[2 * block + 1] = 1;
      }
      rows.push_back(std::move(row));
    }
    cfg.centres.push_back(row_space(f, n, rows));
  }
  return cfg;
}

std::vector<Subspace> independent_centres(FieldPtr field, unsigned t, unsigned s, unsigned n) {
  if (static_cast<unsigned long>(s) * t > n) throw DomainError("independent centres need n >= s*t");
  std::vector<Subspace> out;
  for (unsigned i = 0; i < s; ++i) {
    std::vector<unsigned> coords(t);
    std::iota(coords.begin(), coords.end(), i * t);
    out.push_back(coordinate_subspace(*field, n, coords));
  }
  return out;
}

UnionSpec union_spec_from_centres(const Universe& u, const std::vector<Subspace>& centres) {
  UnionSpec spec;
  for (const auto& c : centres) spec.stars.push_back(StarSpec{u, c});
  return spec;
}

UnionResult construct_v1(FieldPtr field, unsigned n, unsigned k, unsigned t, unsigned s) {
  const Universe u = Universe::vectors(field, n, k);
  return union_of_stars(union_spec_from_centres(u, independent_centres(field, t, s, n)));
}

UnionResult construct_v2(FieldPtr field, unsigned n, unsigned k, unsigned t, unsigned s) {
  const Universe u = Universe::vectors(field, n, k);
  return union_of_stars(union_spec_from_centres(u, greedy_centres_in_W(field, t, s, n).centres));
}

}  // namespace erlab
