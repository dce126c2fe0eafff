#include <gtest/gtest.h>

#include "erlab/errors.hpp"
#include "erlab/search.hpp"
#include "oracles.hpp"

using namespace erlab;

namespace {
std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}
}  // namespace

TEST(Exhaustive, ThreeDisjointEdgesTwoColours) {
  const SearchResult res = exhaustive_optimal(Universe::sets(4, 2), 1, 2);
  EXPECT_EQ(res.max_count, 8);
  EXPECT_GT(res.argmax.size(), 1u);
  EXPECT_NE(std::find(res.argmax.begin(), res.argmax.end(), Bitset::full(6)), res.argmax.end());
  EXPECT_EQ(res.verified, res.argmax.size());
}

TEST(Exhaustive, PetersenAgainstOracle) {
  const Family ground = full_family(Universe::sets(5, 2));
  const auto adj = oracle::from_graph(build_conflict_graph(ground, 1));
  std::uint64_t best = 0;
  std::vector<Bitset> arg;
  for (std::uint64_t m = 0; m < 1024; ++m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 10; ++i)
      if (m >> i & 1) idx.push_back(i);
    oracle::Adjacency sub(idx.size(), std::vector<bool>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = adj[idx[i]][idx[j]];
    const std::uint64_t c = oracle::count_colourings(sub, 3);
    if (c > best) {
      best = c;
      arg.clear();
    }
    if (c == best) arg.push_back(Bitset::from_indices(10, idx));
  }
  std::sort(arg.begin(), arg.end(), index_lex_less);
  const SearchResult res = exhaustive_optimal(ground, 1, 3);
  EXPECT_EQ(res.max_count, best);
  EXPECT_EQ(res.argmax, arg);
  EXPECT_EQ(res.families_examined, 1024);
  // The best subfamilies are the five copies of C([4],2): three disjoint edges, 6^3 colourings.
  EXPECT_EQ(best, 216u);
  EXPECT_EQ(arg.size(), 5u);
}

TEST(Exhaustive, EmptyGround) {
  const SearchResult res = exhaustive_optimal(Family(Universe::sets(3, 2), {}), 1, 3);
  EXPECT_EQ(res.max_count, 1);
  ASSERT_EQ(res.argmax.size(), 1u);
  EXPECT_EQ(res.argmax[0].count(), 0u);
}

TEST(Exhaustive, PruningKeepsMaximum) {
  for (unsigned r : {2u, 3u, 4u}) {
    SearchOptions pruned;
    pruned.degree_pruning = true;
    for (const Universe& u : {Universe::sets(4, 2), Universe::sets(5, 2), Universe::sets(5, 3)}) {
      const SearchResult a = exhaustive_optimal(u, 1, r);
      const SearchResult b = exhaustive_optimal(u, 1, r, pruned);
      EXPECT_EQ(a.max_count, b.max_count);
      EXPECT_GT(b.families_pruned, 0);
      EXPECT_LE(b.argmax.size(), a.argmax.size());
    }
  }
}

TEST(Exhaustive, IndependentOfJobs) {
  SearchOptions par;
  par.jobs = 3;
  const SearchResult a = exhaustive_optimal(Universe::sets(5, 2), 1, 4);
  const SearchResult b = exhaustive_optimal(Universe::sets(5, 2), 1, 4, par);
  EXPECT_EQ(a.max_count, b.max_count);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(a.families_examined, b.families_examined);
}

TEST(Exhaustive, CapSuggestsUnions) {
  try {
    exhaustive_optimal(Universe::sets(7, 2), 1, 3);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("unions"), std::string::npos);
  }
}

TEST(Unions, SinglePartIsBestIntersectingFamily) {
  const SearchResult res = unions_of_maximal_search(Universe::sets(5, 2), 1, 6, 1);
  EXPECT_EQ(res.max_count, power(6, 4));
  EXPECT_EQ(res.argmax.size(), 5u);
}

TEST(Unions, PairsAgainstOracle) {
  const Universe u = Universe::sets(5, 2);
  const Family ground = full_family(u);
  const ConflictGraph g = build_conflict_graph(ground, 1);
  const auto adj = oracle::from_graph(g);
  const auto mis = oracle::maximal_independent_sets(adj);
  const std::vector<std::vector<std::size_t>> fams(mis.begin(), mis.end());
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i; j < fams.size(); ++j) {
      std::set<std::size_t> un(fams[i].begin(), fams[i].end());
      un.insert(fams[j].begin(), fams[j].end());
      const std::vector<std::size_t> idx(un.begin(), un.end());
      oracle::Adjacency sub(idx.size(), std::vector<bool>(idx.size()));
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = adj[idx[a]][idx[b]];
      best = std::max(best, oracle::count_colourings(sub, 6));
    }
  EXPECT_EQ(unions_of_maximal_search(u, 1, 6, 2).max_count, best);
  SearchOptions tight;
  tight.union_budget = 10;
  EXPECT_THROW(unions_of_maximal_search(u, 1, 6, 2, tight), CapacityError);
}

TEST(StarSwap, MainExample) {
  const SwapReport rep = compare_star_swap(15, 3, 2, 6, {kset_from_elements({1, 2}), kset_from_elements({1, 3})}, 1,
                                           kset_from_elements({4, 5}));
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].sizes, (Composition{3, 3}));
  EXPECT_EQ(rep.rows[0].ratio, Rational(3, 2));
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.partitions, 20);  // C(6,3) ordered pairs of parts
  EXPECT_GE(rep.min_ratio, Rational(6, 5));
}

TEST(StarSwap, ExceptionalPartitionsStayAboveOne) {
  const std::vector<KSet> before{kset_from_elements({1, 2}), kset_from_elements({3, 4}), kset_from_elements({1, 5})};
  const SwapReport rep = compare_star_swap(17, 3, 2, 7, before, 2, kset_from_elements({6, 7}));
  EXPECT_EQ(rep.partners, (std::vector<std::size_t>{0}));
  bool saw_exceptional = false;
  for (const auto& row : rep.rows) {
    EXPECT_GE(row.ratio, 1);
    if (!row.exceptional) EXPECT_GE(row.ratio, Rational(6, 5));
    saw_exceptional = saw_exceptional || row.exceptional;
  }
  EXPECT_TRUE(saw_exceptional);
  EXPECT_TRUE(rep.holds);
}

TEST(StarSwap, HypothesesChecked) {
  const auto c = [](std::vector<unsigned> x) { return kset_from_elements(x); };
  EXPECT_THROW(compare_star_swap(15, 3, 1, 6, {c({1}), c({2})}, 1, c({4})), DomainError);
  EXPECT_THROW(compare_star_swap(15, 3, 2, 4, {c({1, 2}), c({1, 3})}, 1, c({4, 5})), DomainError);
  EXPECT_THROW(compare_star_swap(14, 3, 2, 6, {c({1, 2}), c({1, 3})}, 1, c({4, 5})), DomainError);
  EXPECT_THROW(compare_star_swap(15, 3, 2, 6, {c({1, 2}), c({1, 3})}, 1, c({3, 5})), DomainError);
  EXPECT_THROW(compare_star_swap(15, 3, 2, 6, {c({1, 2}), c({1, 3}), c({1, 4})}, 1, c({5, 6})), DomainError);
}

TEST(FourVsTwoTwo, Example) {
  const auto c = [](unsigned x) { return kset_from_elements({x}); };
  const FourVsTwoTwoReport rep = compare_4v22(10, 2, 1, 7, {c(1), c(2), c(3)});
  EXPECT_EQ(rep.phi_before, power(4, 8) * power(3, 8) * 7);
  EXPECT_EQ(rep.phi_after, power(2, 7) * power(3, 7) * power(2, 7) * 100);
  EXPECT_TRUE(rep.holds);
  EXPECT_THROW(compare_4v22(10, 2, 1, 4, {c(1), c(2)}), DomainError);
  EXPECT_THROW(compare_4v22(10, 2, 1, 7, {c(1), c(2)}), DomainError);
}

TEST(PartitionCounts, SplitFactor) {
  for (unsigned r : {7u, 10u, 13u}) {
    const unsigned s = r / 3;
    const BigCount c = optimal_partition_count(r, s, true);
    const BigCount ct = optimal_partition_count(r, s + 1, true);
    EXPECT_EQ(ct, 3 * (s + 1) * c) << r;
    EXPECT_EQ(c, optimal_partition_count(r, s, false));
    EXPECT_EQ(ct, optimal_partition_count(r, s + 1, false));
  }
  EXPECT_EQ(optimal_partition_count(7, 2), 70);
}

TEST(Typicality, StarIsAllTypical) {
  const Universe u = Universe::sets(5, 2);
  const UnionResult s = union_of_stars(UnionSpec{{StarSpec{u, kset_from_elements({1})}}, std::nullopt});
  const TypicalityReport rep = typicality_report(s.family, 3, 1, {}, CensusScope::Family, &s);
  EXPECT_EQ(rep.typical, 81);
  EXPECT_EQ(rep.atypical, 0);
  EXPECT_EQ(rep.phi_max, 81);
}

TEST(Typicality, PetersenSplitsAllColourings) {
  const Family full = full_family(Universe::sets(5, 2));
  const TypicalityReport rep = typicality_report(full, 3, 1);
  EXPECT_EQ(rep.total, 120);
  EXPECT_EQ(rep.typical + rep.atypical, rep.total);
  EXPECT_EQ(typicality_report(full, 3, 1, {}, CensusScope::Universe).total, 120);
}

TEST(Typicality, TwoDisjointStarsReportsSandwich) {
  const Universe u = Universe::sets(5, 2);
  const UnionResult two = union_of_stars(
      UnionSpec{{StarSpec{u, kset_from_elements({1})}, StarSpec{u, kset_from_elements({2})}}, std::nullopt});
  const TypicalityReport rep = typicality_report(two.family, 6, 1, {}, CensusScope::Family, &two);
  EXPECT_EQ(rep.total, count_colourings(two.family, 6, 1).count);
  ASSERT_TRUE(rep.sandwich.has_value());
  EXPECT_GE(*rep.phi_sum, *rep.phi_max);
  RecordProperty("typical", to_decimal(rep.typical));
  RecordProperty("phi_sum", to_decimal(*rep.phi_sum));
  RecordProperty("phi_max", to_decimal(*rep.phi_max));
}

TEST(Typicality, CapacityChecked) {
  SearchOptions opt;
  opt.counting.max_oracle_evals = 100;
  EXPECT_THROW(typicality_report(full_family(Universe::sets(5, 2)), 3, 1, opt), CapacityError);
  (void)all_indices;
}
