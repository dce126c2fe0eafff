#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "erlab/errors.hpp"
#include "erlab/field.hpp"
#include "erlab/ground.hpp"
#include "oracles.hpp"

using namespace erlab;

namespace {

// Every vector of a subspace, by summing all coefficient combinations of its basis rows.
std::set<std::vector<std::uint8_t>> vectors_of(const GaloisField& f, const Subspace& s) {
  std::set<std::vector<std::uint8_t>> out;
  std::vector<unsigned> coeff(s.dim, 0);
  const unsigned q = f.order();
  while (true) {
    std::vector<std::uint8_t> v(s.cols, 0);
    for (unsigned r = 0; r < s.dim; ++r)
      for (unsigned c = 0; c < s.cols; ++c) v[c] = f.add(v[c], f.mul(coeff[r], s.at(r, c)));
    out.insert(v);
    unsigned i = 0;
    while (i < s.dim && ++coeff[i] == q) coeff[i++] = 0;
    if (i == s.dim) break;
  }
  return out;
}

bool is_rref(const Subspace& s) {
  int last = -1;
  for (unsigned r = 0; r < s.dim; ++r) {
    unsigned c = 0;
    while (c < s.cols && s.at(r, c) == 0) ++c;
    if (c == s.cols || static_cast<int>(c) <= last || s.at(r, c) != 1) return false;
    for (unsigned r2 = 0; r2 < s.dim; ++r2)
      if (r2 != r && s.at(r2, c) != 0) return false;
    last = static_cast<int>(c);
  }
  return true;
}

}  // namespace

TEST(GaussianBinomial, MatchesQPascal) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (long n = 0; n <= 12; ++n)
      for (long k = 0; k <= n; ++k) EXPECT_EQ(gaussian_binomial(n, k, q), oracle::gauss_pascal(n, k, q));
}

TEST(GaussianBinomial, Examples) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(7, 0, 5), 1);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13);
  EXPECT_THROW(gaussian_binomial(3, 4, 2), DomainError);
  EXPECT_THROW(gaussian_binomial(3, -1, 2), DomainError);
}

TEST(Enumerate, VectorsMatchClosedFormAndAreCanonical) {
  for (unsigned q : {2u, 3u, 4u}) {
    const FieldPtr f = GaloisField::make(q);
    for (unsigned n = 0; n <= 5; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const auto elems = enumerate_elements(Universe::vectors(f, n, k));
        ASSERT_EQ(BigCount(static_cast<unsigned long>(elems.size())), gaussian_binomial(n, k, q));
        for (std::size_t i = 0; i < elems.size(); ++i) {
          const auto& s = std::get<Subspace>(elems[i]);
          EXPECT_EQ(s.dim, k);
          EXPECT_TRUE(is_rref(s));
          if (i) EXPECT_TRUE(std::get<Subspace>(elems[i - 1]) < s);
          EXPECT_EQ(row_space(*f, n, basis_rows(s)), s);
        }
      }
  }
}

TEST(Enumerate, SetsAndPermutations) {
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      const auto elems = enumerate_elements(Universe::sets(n, k));
      ASSERT_EQ(BigCount(static_cast<unsigned long>(elems.size())), binomial(n, k));
      for (std::size_t i = 1; i < elems.size(); ++i) EXPECT_LT(std::get<KSet>(elems[i - 1]), std::get<KSet>(elems[i]));
    }
  for (unsigned n = 1; n <= 6; ++n) {
    const auto elems = enumerate_elements(Universe::permutations(n));
    ASSERT_EQ(BigCount(static_cast<unsigned long>(elems.size())), factorial(n));
    for (std::size_t i = 1; i < elems.size(); ++i)
      EXPECT_LT(std::get<Permutation>(elems[i - 1]), std::get<Permutation>(elems[i]));
  }
  EXPECT_EQ(enumerate_elements(Universe::sets(5, 2)).size(), 10u);
  EXPECT_EQ(enumerate_elements(Universe::permutations(3)).size(), 6u);
}

TEST(Enumerate, CapacityErrorNamesCount) {
  try {
    enumerate_elements(Universe::sets(20, 10), 1000);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("184756"), std::string::npos);
  }
}

TEST(Universe, Validation) {
  EXPECT_THROW(Universe::sets(3, 4), DomainError);
  EXPECT_THROW(Universe::sets(65, 2), DomainError);
  EXPECT_NO_THROW(Universe::sets(64, 2));
  EXPECT_EQ(Universe::vectors(GaloisField::make(2), 4, 2).describe(), "vs q=2 n=4 k=2");
  EXPECT_EQ(Universe::permutations(4).describe(), "perm n=4");
}

TEST(IntersectionMeasure, VectorsAgreeWithPointCounts) {
  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 4u}) {
    const FieldPtr f = GaloisField::make(q);
    for (unsigned k = 1; k <= 3; ++k) {
      const Universe u = Universe::vectors(f, 5, k);
      const auto elems = enumerate_elements(u);
      for (int trial = 0; trial < 40; ++trial) {
        const auto& a = elems[rng() % elems.size()];
        const auto& b = elems[rng() % elems.size()];
        const auto va = vectors_of(*f, std::get<Subspace>(a)), vb = vectors_of(*f, std::get<Subspace>(b));
        std::size_t common = 0;
        for (const auto& v : va) common += vb.count(v);
        unsigned d = 0;
        for (std::size_t p = 1; p < common; p *= q) ++d;
        const unsigned m = intersection_measure(u, a, b);
        EXPECT_EQ(m, d);
        EXPECT_EQ(m, intersection_measure(u, b, a));
        EXPECT_EQ(m == k, a == b);
      }
    }
  }
}

TEST(IntersectionMeasure, SetsAndPermutations) {
  const Universe s = Universe::sets(5, 2);
  EXPECT_EQ(intersection_measure(s, kset_from_elements({1, 2}), kset_from_elements({2, 3})), 1u);
  const Universe p = Universe::permutations(4);
  const Permutation id{{0, 1, 2, 3}}, sw{{1, 0, 2, 3}};
  EXPECT_EQ(intersection_measure(p, id, id), 4u);
  EXPECT_EQ(intersection_measure(p, id, sw), 2u);
  const FieldPtr f = GaloisField::make(2);
  const Universe v = Universe::vectors(f, 2, 1);
  EXPECT_EQ(intersection_measure(v, row_space(*f, 2, {{1, 0}}), row_space(*f, 2, {{1, 1}})), 0u);
}

TEST(SpanDim, Examples) {
  const FieldPtr f = GaloisField::make(3);
  const Universe u = Universe::vectors(f, 4, 2);
  const Subspace l1 = row_space(*f, 4, {{1, 0, 0, 0}});
  const Subspace l2 = row_space(*f, 4, {{0, 1, 0, 0}});
  const Subspace l3 = row_space(*f, 4, {{1, 1, 0, 0}});
  EXPECT_EQ(subspace_span_dim(u, {l1, l1}), 1u);
  EXPECT_EQ(subspace_span_dim(u, {l1, l2, l3}), 2u);
  const Subspace a = row_space(*f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const Subspace b = row_space(*f, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(subspace_span_dim(u, {a, b}), 4u);
  EXPECT_THROW(subspace_span_dim(Universe::sets(4, 2), {kset_from_elements({1, 2})}), DomainError);
}

TEST(RowSpace, IdempotentAndPreservesMembership) {
  std::mt19937_64 rng(5);
  const FieldPtr f = GaloisField::make(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::uint8_t>> rows(1 + rng() % 4, std::vector<std::uint8_t>(6));
    for (auto& row : rows)
      for (auto& x : row) x = static_cast<std::uint8_t>(rng() % 5);
    const Subspace s = row_space(*f, 6, rows);
    EXPECT_EQ(row_space(*f, 6, basis_rows(s)), s);
    for (const auto& row : rows) EXPECT_TRUE(subspace_contains(*f, s, row));
    EXPECT_EQ(s.dim, rank(*f, 6, rows));
  }
}
