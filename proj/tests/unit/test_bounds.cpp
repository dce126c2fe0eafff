#include <gtest/gtest.h>

#include "erlab/bounds.hpp"
#include "erlab/constructions.hpp"
#include "erlab/counting.hpp"
#include "erlab/errors.hpp"
#include "erlab/field.hpp"
#include "erlab/optimisation.hpp"

using namespace erlab;

TEST(PermutationBound, SignChangesOnceAtNineteen) {
  for (long n = 2; n <= 30; ++n) {
    const Certificate c = certify_permutation_bound(n, 1, 256);
    EXPECT_EQ(c.sign, n <= 18 ? Sign::Negative : Sign::Positive) << n;
  }
  for (long t = 1; t <= 10; ++t) EXPECT_EQ(certify_permutation_bound(t + 1, t).sign, Sign::Negative);
}

TEST(VectorMargin, CaseAnalysis) {
  for (unsigned long q : {3ul, 4ul, 5ul}) EXPECT_EQ(certify_vector_margin(9, 4, q, 256).sign, Sign::Positive);
  const Certificate two = certify_vector_margin(9, 4, 2, 256);
  EXPECT_EQ(two.sign, Sign::Negative);
  EXPECT_TRUE(two.enclosure.contains(32768 - 16 - 2304 * 22));
  EXPECT_EQ(certify_vector_margin(10, 4, 2, 256).sign, Sign::Positive);
  const CertifiedInterval crit = vector_3col_margin_critical(4, 3, 128);
  const CertifiedInterval gen = vector_3col_margin(9, 4, 3, 128);
  EXPECT_TRUE(crit.lo() <= gen.hi() && gen.lo() <= crit.hi());
}

TEST(Eta, Table) {
  EXPECT_EQ(sets_eta(7, 3), 1);
  EXPECT_EQ(sets_eta(4, 1), 18);
  EXPECT_EQ(sets_eta(5, 2), 50000);
  EXPECT_EQ(sets_eta(4, 2), 40000);
  EXPECT_EQ(sets_eta(2, 1), 9);  // ceil(2 + 10 ln 2) = ceil(8.93)
}

TEST(Catalog, SetsFormulas) {
  const CatalogEntry c = catalog(ParameterPoint::sets(13, 2, 1));
  EXPECT_EQ(c.N0, 12);
  EXPECT_EQ(c.n1_rational, 3);  // C(12,1) - C(10,1) + 1
  EXPECT_EQ(c.N2, 1);
  const CatalogEntry d = catalog(ParameterPoint::sets(10, 4, 2));
  EXPECT_EQ(d.N0, binomial(8, 2));
  // max(|H1|, |H2|) with |H1| = 4 C(6,1) + C(6,0) and |H2| = C(8,2) - C(5,2) + 2
  EXPECT_EQ(d.n1_rational, std::max<BigCount>(4 * binomial(6, 1) + 1, binomial(8, 2) - binomial(5, 2) + 2));
}

TEST(Catalog, SlackIsRequiredWhereSpecified) {
  EXPECT_THROW(catalog(ParameterPoint::permutations(19, 1)), ConfigError);
  EXPECT_THROW(catalog(ParameterPoint::vectors(2, 8, 3, 2)), ConfigError);
  EXPECT_NO_THROW(catalog(ParameterPoint::vectors(2, 8, 3, 1)));
  ParameterPoint p = ParameterPoint::permutations(19, 1);
  p.slack = Rational(1);
  EXPECT_NO_THROW(catalog(p));
}

TEST(Catalog, VectorValuesWithinGaussianSandwich) {
  for (unsigned long q : {2ul, 3ul, 4ul})
    for (long n = 5; n <= 9; ++n) {
      const CatalogEntry c = catalog(ParameterPoint::vectors(q, n, 2, 1));
      const BigCount lower = power(q, static_cast<unsigned long>(n - 2));
      EXPECT_GE(c.N0, lower);
      EXPECT_LE(c.N0, 4 * lower);
    }
}

TEST(Eq1, Examples) {
  EXPECT_EQ(certify_3col_inequality(ParameterPoint::sets(13, 2, 1)).sign, Sign::Negative);
  EXPECT_EQ(certify_3col_inequality(ParameterPoint::sets(200, 3, 1)).sign, Sign::Positive);
  ParameterPoint p = ParameterPoint::permutations(19, 1);
  p.slack = Rational(1);
  EXPECT_NO_THROW(certify_3col_inequality(p));
}

TEST(Delta, Examples) {
  const DeltaReport big = certify_delta(ParameterPoint::sets(2000, 3, 1, 6));
  EXPECT_EQ(big.delta.sign, Sign::Positive);
  EXPECT_EQ(big.gate.sign, Sign::Positive);
  EXPECT_EQ(certify_delta(ParameterPoint::sets(13, 2, 1, 6)).delta.sign, Sign::Negative);
}

TEST(Entropy, Enclosures) {
  EXPECT_TRUE(entropy_enclosure(Rational(1, 2)).contains(1));
  EXPECT_LT(entropy_enclosure(Rational(1, 10000)).hi(), Rational(1, 648));
  const CertifiedInterval a = entropy_enclosure(Rational(3, 10)), b = entropy_enclosure(Rational(7, 10));
  EXPECT_TRUE(a.lo() <= b.hi() && b.lo() <= a.hi());
  EXPECT_THROW(entropy_enclosure(Rational(0)), DomainError);
  EXPECT_THROW(entropy_enclosure(Rational(1)), DomainError);
}

TEST(LowerBound, Generic) {
  const LowerBound b = lower_bound_colourings(LowerBoundKind::Generic, ParameterPoint::sets(9, 2, 1, 6), 0);
  ASSERT_TRUE(b.value.has_value());
  EXPECT_EQ(*b.value, 531441);
  EXPECT_EQ(b.exponent, 6);
}

TEST(LowerBound, V1SingleStar) {
  const LowerBound b = lower_bound_colourings(LowerBoundKind::V1SmallK, ParameterPoint::vectors(2, 4, 2, 1, 3), 1);
  ASSERT_TRUE(b.value.has_value());
  EXPECT_EQ(*b.value, power(3, 7));
}

TEST(LowerBound, V2EqualsPhiOfConstruction) {
  for (auto [q, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}})
    for (unsigned n = 4; n <= 5; ++n) {
      const UnionResult u = construct_v2(GaloisField::make(q), n, 2, 1, s);
      const BigCount phi = count_phi(u.stars, ColourPartition::from_sizes(std::vector<unsigned>(s, 3)), 1);
      const LowerBound b = lower_bound_colourings(LowerBoundKind::V2, ParameterPoint::vectors(q, n, 2, 1, 3 * s), s);
      ASSERT_TRUE(b.value.has_value());
      EXPECT_EQ(*b.value, phi) << q << " " << s << " " << n;
    }
  const LowerBound w =
      lower_bound_colourings(LowerBoundKind::V2, ParameterPoint::vectors(2, 4, 2, 1, 6), 2);
  EXPECT_EQ(*w.value, 3188646);
  EXPECT_THROW(lower_bound_colourings(LowerBoundKind::V2, ParameterPoint::vectors(2, 4, 2, 1, 12), 4), DomainError);
}

TEST(ParameterPoint, Validation) {
  EXPECT_THROW(ParameterPoint::sets(5, 2, 2).validate(), DomainError);
  EXPECT_THROW(ParameterPoint::sets(5, 2, 1, 1).validate(), DomainError);
  EXPECT_NO_THROW(ParameterPoint::permutations(5, 5).validate());
}
