#include "erlab/ground.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "erlab/errors.hpp"

namespace erlab {

std::string to_string(Setting setting) {
  switch (setting) {
    case Setting::Sets: return "set";
    case Setting::Vectors: return "vs";
    case Setting::Permutations: return "perm";
  }
  return "?";
}

std::vector<unsigned> Subspace::pivots() const {
  std::vector<unsigned> out;
  out.reserve(dim);
  for (unsigned r = 0; r < dim; ++r) {
    unsigned c = 0;
    while (c < cols && at(r, c) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.cols != b.cols) return a.cols < b.cols;
  const auto pa = a.pivots();
  const auto pb = b.pivots();
  if (pa != pb) return pa < pb;
  return a.entries < b.entries;
}

Universe Universe::sets(unsigned n, unsigned k) {
  Universe u;
  u.setting = Setting::Sets;
  u.n = n;
  u.k = k;
  u.validate();
  return u;
}

Universe Universe::vectors(FieldPtr field, unsigned n, unsigned k) {
  Universe u;
  u.setting = Setting::Vectors;
  u.n = n;
  u.k = k;
  u.field = std::move(field);
  u.validate();
  return u;
}

Universe Universe::permutations(unsigned n) {
  Universe u;
  u.setting = Setting::Permutations;
  u.n = n;
  u.validate();
  return u;
}

BigCount Universe::element_count() const {
  switch (setting) {
    case Setting::Sets: return binomial(n, k);
    case Setting::Vectors: return gaussian_binomial(n, k, field->order());
    case Setting::Permutations: return factorial(n);
  }
  return 0;
}

void Universe::validate() const {
  switch (setting) {
    case Setting::Sets:
      if (n > 64) throw DomainError("set universes support n <= 64");
      if (k > n) throw DomainError("k must not exceed n");
      if (field) throw DomainError("set universes carry no field");
      break;
    case Setting::Vectors:
      if (!field) throw DomainError("vector universes need a field");
      if (n > 64) throw DomainError("vector universes support n <= 64");
      if (k > n) throw DomainError("k must not exceed n");
      break;
    case Setting::Permutations:
      if (n > 255) throw DomainError("permutation universes support n <= 255");
      if (field) throw DomainError("permutation universes carry no field");
      break;
  }
}

void Universe::validate(const GroundElement& e) const {
  switch (setting) {
    case Setting::Sets: {
      const auto* s = std::get_if<KSet>(&e);
      if (!s) throw DomainError("element is not a set");
      if (n < 64 && (s->mask >> n) != 0) throw DomainError("set element outside [n]");
      if (static_cast<unsigned>(std::popcount(s->mask)) != k)
        throw DomainError("set has " + std::to_string(std::popcount(s->mask)) +
                          " elements, expected " + std::to_string(k));
      break;
    }
    case Setting::Vectors: {
      const auto* s = std::get_if<Subspace>(&e);
      if (!s) throw DomainError("element is not a subspace");
      if (s->cols != n || s->dim != k) throw DomainError("subspace has the wrong shape");
      std::vector<std::vector<std::uint8_t>> rows = basis_rows(*s);
      if (!(row_space(*field, n, rows) == *s)) throw DomainError("subspace is not in reduced echelon form");
      break;
    }
    case Setting::Permutations: {
      const auto* p = std::get_if<Permutation>(&e);
      if (!p) throw DomainError("element is not a permutation");
      if (p->image.size() != n) throw DomainError("permutation has the wrong length");
      std::vector<bool> seen(n, false);
      for (auto v : p->image) {
        if (v >= n || seen[v]) throw DomainError("image array is not a bijection");
        seen[v] = true;
      }
      break;
    }
  }
}

std::string Universe::describe() const {
  switch (setting) {
    case Setting::Sets: return "set n=" + std::to_string(n) + " k=" + std::to_string(k);
    case Setting::Vectors:
      return "vs q=" + std::to_string(field->order()) + " n=" + std::to_string(n) +
             " k=" + std::to_string(k);
    case Setting::Permutations: return "perm n=" + std::to_string(n);
  }
  return "?";
}

bool operator==(const Universe& a, const Universe& b) {
  if (a.setting != b.setting || a.n != b.n) return false;
  if (a.setting == Setting::Permutations) return true;
  if (a.k != b.k) return false;
  if (a.setting == Setting::Vectors) return same_field(*a.field, *b.field);
  return true;
}

BigCount gaussian_binomial(long n, long k, unsigned long q) {
  if (k < 0 || k > n) {
    throw DomainError("gaussian binomial needs 0 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  if (q < 2) throw DomainError("field order must be at least 2");
  BigCount num = 1;
  BigCount den = 1;
  const BigCount qq = q;
  for (long i = 0; i < k; ++i) {
    num *= power(qq, static_cast<unsigned long>(n - i)) - 1;
    den *= power(qq, static_cast<unsigned long>(k - i)) - 1;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error("gaussian binomial product is not integral");
  }
  BigCount out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

namespace {

void check_cap(const Universe& u, std::size_t cap) {
  const BigCount count = u.element_count();
  if (count > BigCount(static_cast<unsigned long>(cap))) {
    throw CapacityError("universe " + u.describe() + " has " + to_decimal(count) +
                        " elements, above the enumeration cap of " + std::to_string(cap));
  }
}

void enumerate_sets(const Universe& u, std::vector<GroundElement>& out) {
  if (u.k == 0) {
    out.emplace_back(KSet{0});
    return;
  }
  const unsigned n = u.n;
  std::uint64_t v = (u.k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << u.k) - 1);
  while (true) {
    out.emplace_back(KSet{v});
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    if (r == 0) break;  // overflow past bit 63
    const std::uint64_t next = (((r ^ v) >> 2) / c) | r;
    if (n < 64 && (next >> n) != 0) break;
    v = next;
  }
}

void enumerate_vectors(const Universe& u, std::vector<GroundElement>& out) {
  const GaloisField& f = *u.field;
  const unsigned n = u.n;
  const unsigned k = u.k;
  const unsigned q = f.order();
  std::vector<unsigned> piv(k);
  std::iota(piv.begin(), piv.end(), 0U);
  while (true) {
    Subspace base;
    base.dim = k;
    base.cols = n;
    base.entries.assign(static_cast<std::size_t>(k) * n, 0);
    std::vector<bool> is_pivot(n, false);
    for (unsigned r = 0; r < k; ++r) {
      base.entries[r * n + piv[r]] = 1;
      is_pivot[piv[r]] = true;
    }
    std::vector<std::size_t> free_pos;
    for (unsigned r = 0; r < k; ++r)
      for (unsigned c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.push_back(static_cast<std::size_t>(r) * n + c);
    // Odometer, last free position least significant, gives lex order on entries.
    while (true) {
      out.emplace_back(base);
      std::size_t i = free_pos.size();
      while (i > 0) {
        auto& cell = base.entries[free_pos[i - 1]];
        if (cell + 1U < q) {
          ++cell;
          break;
        }
        cell = 0;
        --i;
      }
      if (i == 0) break;
    }
    // Next pivot combination in lex order.
    long j = static_cast<long>(k) - 1;
    while (j >= 0 && piv[j] == n - k + static_cast<unsigned>(j)) --j;
    if (j < 0) break;
    ++piv[j];
    for (unsigned r = static_cast<unsigned>(j) + 1; r < k; ++r) piv[r] = piv[r - 1] + 1;
  }
}

void enumerate_perms(const Universe& u, std::vector<GroundElement>& out) {
  Permutation p;
  p.image.resize(u.n);
  std::iota(p.image.begin(), p.image.end(), std::uint8_t{0});
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
}

}  // namespace

std::vector<GroundElement> enumerate_elements(const Universe& u, std::size_t cap) {
  u.validate();
  check_cap(u, cap);
  std::vector<GroundElement> out;
  out.reserve(to_u64(u.element_count()));
  switch (u.setting) {
    case Setting::Sets: enumerate_sets(u, out); break;
    case Setting::Vectors: enumerate_vectors(u, out); break;
    case Setting::Permutations: enumerate_perms(u, out); break;
  }
  return out;
}

Subspace row_space(const GaloisField& f, unsigned cols,
                   const std::vector<std::vector<std::uint8_t>>& rows_in) {
  std::vector<std::vector<std::uint8_t>> m = rows_in;
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("row length does not match the ambient dimension");
  unsigned rank_so_far = 0;
  for (unsigned c = 0; c < cols && rank_so_far < m.size(); ++c) {
    std::size_t pivot = rank_so_far;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank_so_far], m[pivot]);
    auto& prow = m[rank_so_far];
    const auto inv = f.inv(prow[c]);
    for (auto& x : prow) x = f.mul(x, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank_so_far || m[r][c] == 0) continue;
      const auto factor = m[r][c];
      for (unsigned j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, prow[j]));
    }
    ++rank_so_far;
  }
  Subspace s;
  s.dim = rank_so_far;
  s.cols = cols;
  s.entries.reserve(static_cast<std::size_t>(rank_so_far) * cols);
  for (unsigned r = 0; r < rank_so_far; ++r) s.entries.insert(s.entries.end(), m[r].begin(), m[r].end());
  return s;
}

unsigned rank(const GaloisField& f, unsigned cols, const std::vector<std::vector<std::uint8_t>>& rows) {
  return row_space(f, cols, rows).dim;
}

std::vector<std::vector<std::uint8_t>> basis_rows(const Subspace& s) {
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(s.dim);
  for (unsigned r = 0; r < s.dim; ++r) {
    rows.emplace_back(s.entries.begin() + static_cast<long>(r) * s.cols,
                      s.entries.begin() + static_cast<long>(r + 1) * s.cols);
  }
  return rows;
}

unsigned span_dim(const GaloisField& f, const std::vector<Subspace>& parts) {
  if (parts.empty()) return 0;
  const unsigned cols = parts.front().cols;
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& p : parts) {
    if (p.cols != cols) throw DomainError("subspaces live in different ambient spaces");
    for (auto& r : basis_rows(p)) rows.push_back(std::move(r));
  }
  return rank(f, cols, rows);
}

unsigned subspace_span_dim(const Universe& u, const std::vector<GroundElement>& centres) {
  if (u.setting != Setting::Vectors) throw DomainError("span dimension needs a vector universe");
  std::vector<Subspace> parts;
  for (const auto& c : centres) {
    const auto* s = std::get_if<Subspace>(&c);
    if (!s) throw DomainError("centre is not a subspace");
    if (s->cols != u.n) throw DomainError("centre lives outside the ambient space");
    parts.push_back(*s);
  }
  return span_dim(*u.field, parts);
}

bool subspace_contains(const GaloisField& f, const Subspace& big, const Subspace& small) {
  return span_dim(f, {big, small}) == big.dim;
}

bool subspace_contains(const GaloisField& f, const Subspace& s, const std::vector<std::uint8_t>& v) {
  auto rows = basis_rows(s);
  rows.push_back(v);
  return rank(f, s.cols, rows) == s.dim;
}

unsigned intersection_measure(const Universe& u, const GroundElement& a, const GroundElement& b) {
  switch (u.setting) {
    case Setting::Sets: {
      const auto* x = std::get_if<KSet>(&a);
      const auto* y = std::get_if<KSet>(&b);
      if (!x || !y) throw DomainError("elements do not belong to a set universe");
      return static_cast<unsigned>(std::popcount(x->mask & y->mask));
    }
    case Setting::Vectors: {
      const auto* x = std::get_if<Subspace>(&a);
      const auto* y = std::get_if<Subspace>(&b);
      if (!x || !y) throw DomainError("elements do not belong to a vector universe");
      if (x->cols != u.n || y->cols != u.n) throw DomainError("subspaces live in different ambient spaces");
      return x->dim + y->dim - span_dim(*u.field, {*x, *y});
    }
    case Setting::Permutations: {
      const auto* x = std::get_if<Permutation>(&a);
      const auto* y = std::get_if<Permutation>(&b);
      if (!x || !y) throw DomainError("elements do not belong to a permutation universe");
      if (x->image.size() != y->image.size()) throw DomainError("permutations of different lengths");
      unsigned agree = 0;
      for (std::size_t i = 0; i < x->image.size(); ++i) agree += x->image[i] == y->image[i];
      return agree;
    }
  }
  return 0;
}

KSet kset_from_elements(const std::vector<unsigned>& one_based) {
  KSet s;
  for (auto e : one_based) {
    if (e == 0 || e > 64) throw DomainError("set element " + std::to_string(e) + " out of range");
    s.mask |= std::uint64_t{1} << (e - 1);
  }
  return s;
}

std::vector<unsigned> kset_elements(const KSet& s) {
  std::vector<unsigned> out;
  std::uint64_t m = s.mask;
  while (m != 0) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return out;
}

}  // namespace erlab
