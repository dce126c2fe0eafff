#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "erlab/errors.hpp"
#include "erlab/family.hpp"
#include "erlab/family_io.hpp"
#include "erlab/field.hpp"

using namespace erlab;

namespace {
Family sets_family(unsigned n, unsigned k, const std::vector<std::vector<unsigned>>& members) {
  std::vector<GroundElement> m;
  for (const auto& x : members) m.emplace_back(kset_from_elements(x));
  return Family(Universe::sets(n, k), m);
}
}  // namespace

TEST(Family, SortsAndDeduplicates) {
  const Family f = sets_family(5, 2, {{3, 4}, {1, 2}, {3, 4}});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.duplicates_removed(), 1u);
  EXPECT_EQ(std::get<KSet>(f[0]), kset_from_elements({1, 2}));
  EXPECT_EQ(f.index_of(kset_from_elements({3, 4})), std::optional<std::size_t>(1));
  EXPECT_FALSE(f.index_of(kset_from_elements({1, 5})).has_value());
  EXPECT_THROW(sets_family(5, 2, {{1, 2, 3}}), DomainError);
}

TEST(ConflictGraph, Examples) {
  const Family star = sets_family(5, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  EXPECT_TRUE(build_conflict_graph(star, 1).edgeless());
  EXPECT_TRUE(is_t_intersecting(star, 1));
  const Family pair = sets_family(5, 2, {{1, 2}, {3, 4}});
  EXPECT_EQ(build_conflict_graph(pair, 1).edge_count(), 1u);
  EXPECT_FALSE(is_t_intersecting(pair, 1));
  EXPECT_TRUE(is_t_intersecting(sets_family(5, 2, {{2, 5}}), 1));
  const Family full = full_family(Universe::sets(5, 2));
  const ConflictGraph petersen = build_conflict_graph(full, 1);
  EXPECT_EQ(petersen.vertex_count(), 10u);
  EXPECT_EQ(petersen.edge_count(), 15u);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
  EXPECT_THROW(build_conflict_graph(full, 0), DomainError);
  EXPECT_THROW(build_conflict_graph(full, 3), DomainError);
}

TEST(ConflictGraph, KneserDegrees) {
  for (unsigned n = 2; n <= 8; ++n)
    for (unsigned k = 1; 2 * k <= n; ++k) {
      const ConflictGraph g = build_conflict_graph(full_family(Universe::sets(n, k)), 1);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(BigCount(g.degree(v)), binomial(n - k, k));
    }
}

TEST(ConflictGraph, EdgesMatchIntersectionMeasure) {
  const FieldPtr f = GaloisField::make(2);
  for (const Universe& u : {Universe::sets(6, 3), Universe::vectors(f, 4, 2), Universe::permutations(4)}) {
    const Family fam = full_family(u);
    for (unsigned t = 1; t <= u.full_measure(); ++t) {
      const ConflictGraph g = build_conflict_graph(fam, t);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        EXPECT_FALSE(g.adjacent(i, i));
        for (std::size_t j = 0; j < fam.size(); ++j) {
          EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
          if (i != j) EXPECT_EQ(g.adjacent(i, j), intersection_measure(u, fam[i], fam[j]) < t);
        }
      }
    }
  }
}

TEST(ConflictGraph, SubfamilyGivesInducedSubgraph) {
  std::mt19937_64 rng(3);
  const Family full = full_family(Universe::sets(7, 3));
  const ConflictGraph g = build_conflict_graph(full, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Bitset sel(full.size());
    for (std::size_t i = 0; i < full.size(); ++i)
      if (rng() % 3 == 0) sel.set(i);
    const Family sub = full.subfamily(sel);
    const ConflictGraph direct = build_conflict_graph(sub, 1);
    const ConflictGraph induced = g.induced(sel);
    ASSERT_EQ(direct.vertex_count(), induced.vertex_count());
    for (std::size_t i = 0; i < direct.vertex_count(); ++i) EXPECT_EQ(direct.row(i), induced.row(i));
    EXPECT_EQ(is_t_intersecting(sub, 1), direct.edgeless());
  }
}

TEST(ConflictGraph, SelfLoopRejected) {
  ConflictGraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
}

TEST(FamilyIo, RoundTripAllSettings) {
  const FieldPtr f = GaloisField::make(3);
  for (const Universe& u : {Universe::sets(6, 2), Universe::vectors(f, 3, 2), Universe::permutations(4)}) {
    const Family fam = full_family(u);
    EXPECT_EQ(parse_family(format_family(fam)), fam);
  }
}

TEST(FamilyIo, CommentsBlankLinesAndAnyBasis) {
  const Family fam = parse_family("# a comment\nvs q=2 n=3 k=2\n\n110;011  # same as 101;011\n101;011\n");
  EXPECT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam.duplicates_removed(), 1u);
  EXPECT_EQ(format_element(fam.universe(), fam[0]), "101;011");
}

TEST(FamilyIo, ErrorsCarryLineNumbers) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_family(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("set n=5 k=2\n1,2\n1,x\n"), 3u);
  EXPECT_EQ(line_of("set n=5 k=2\n1,2\n\n2,1\n"), 4u);     // not increasing
  EXPECT_EQ(line_of("set n=5 k=2\n1,6\n"), 2u);            // outside [n]
  EXPECT_EQ(line_of("sets n=5 k=2\n"), 1u);                // bad header
  EXPECT_EQ(line_of("vs q=2 n=3 k=2\n100;200\n"), 2u);     // digit >= q
  EXPECT_EQ(line_of("vs q=2 n=3 k=2\n100;100\n"), 2u);     // dependent rows
  EXPECT_EQ(line_of("perm n=3\n1,1,2\n"), 2u);             // not a bijection
  EXPECT_THROW(read_family_file("/nonexistent/file"), ConfigError);
}
