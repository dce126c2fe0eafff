#include <gtest/gtest.h>

#include "erlab/errors.hpp"
#include "erlab/optimisation.hpp"

using namespace erlab;

TEST(Opt, ClosedFormMatchesBruteForce) {
  for (long r = 0; r <= 40; ++r) {
    const OptResult b = opt_bruteforce(r);
    EXPECT_EQ(opt_value(r), b.value) << r;
    if (r >= 2) EXPECT_EQ(opt_structure(r), b.argmax) << r;
  }
  EXPECT_THROW(opt_bruteforce(41), CapacityError);
}

TEST(Opt, Examples) {
  EXPECT_EQ(opt_value(7), 12);
  EXPECT_EQ(opt_bruteforce(4).argmax, (std::vector<Composition>{{4}, {2, 2}}));
  EXPECT_EQ(opt_bruteforce(5).argmax, (std::vector<Composition>{{3, 2}}));
  EXPECT_EQ(opt_bruteforce(0).argmax, (std::vector<Composition>{{}}));
  EXPECT_EQ(opt_bruteforce(7).argmax, (std::vector<Composition>{{4, 3}, {3, 2, 2}}));
}

TEST(Opt, StructureByResidue) {
  for (long r = 2; r <= 40; ++r) {
    const auto arg = opt_structure(r);
    for (const auto& m : arg) {
      long sum = 0;
      int twos = 0, fours = 0;
      for (auto x : m) {
        sum += x;
        EXPECT_TRUE(x == 2 || x == 3 || x == 4);
        twos += x == 2;
        fours += x == 4;
      }
      EXPECT_EQ(sum, r);
      if (r % 3 == 0) EXPECT_EQ(twos + fours, 0);
      if (r % 3 == 2) EXPECT_TRUE(twos == 1 && fours == 0);
    }
    EXPECT_EQ(arg.size(), r % 3 == 1 ? 2u : 1u);
  }
}

TEST(Opt, GapAndMonotone) {
  for (long r = 0; r <= 40; ++r) EXPECT_TRUE(verify_opt_gap(r)) << r;
  for (long r = 3; r <= 40; ++r) EXPECT_TRUE(verify_opt_monotone(r)) << r;
  EXPECT_THROW(verify_opt_monotone(2), DomainError);
}

TEST(VsOpt, HoldsWithUniqueEquality) {
  for (unsigned s = 2; s <= 9; ++s) {
    const VsOptResult res = vsopt_check(s);
    EXPECT_TRUE(res.holds) << s;
    EXPECT_EQ(res.equality_cases, (std::vector<Composition>{{s}})) << s;
    for (const auto& m : res.feasible) {
      long pairs = 0;
      for (auto x : m) pairs += static_cast<long>(x) * (x - 1) / 2;
      EXPECT_EQ(pairs, static_cast<long>(s) * (s - 1) / 2);
    }
  }
  EXPECT_THROW(vsopt_check(1), DomainError);
  EXPECT_THROW(vsopt_check(10), DomainError);
}

TEST(VsOpt, IntegerTransformation) {
  // s = 3, (2,2,2): 3 * 3^3 = 81 against 3^2 * 8 = 72.
  EXPECT_EQ(vsopt_compare(3, {2, 2, 2}), 1);
  EXPECT_EQ(vsopt_compare(3, {3}), 0);
  EXPECT_EQ(vsopt_check(2).feasible, (std::vector<Composition>{{2}}));
}

TEST(VsOpt, GDecreasing) {
  for (unsigned x = 2; x <= 20; ++x) EXPECT_TRUE(g_decreasing_at(x)) << x;
}
