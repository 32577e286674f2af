#include "agraded/exponents.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace agraded;

namespace {

ExponentVector ev(std::vector<int> c) { return ExponentVector(std::move(c)); }

TEST(ExponentVector, BasicsAndErrors) {
  ExponentVector a = ev({2, 1});
  EXPECT_EQ(a.total_degree(), 3);
  EXPECT_EQ(a.support(), Face::of({0, 1}));
  EXPECT_TRUE(ev({1, 0}).divides(a));
  EXPECT_FALSE(ev({0, 2}).divides(a));
  EXPECT_THROW(ev({1, -1}), input_error);
  EXPECT_THROW(a.divides(ev({1, 1, 1})), input_error);
  EXPECT_EQ(a + ev({0, 4}), ev({2, 5}));
}

TEST(ExponentVector, AdditionDetectsOverflow) {
  ExponentVector big = ev({std::numeric_limits<int>::max(), 0});
  EXPECT_THROW(big + ev({1, 0}), std::overflow_error);
}

TEST(Face, CanonicalOrderIsSortedListOrder) {
  // {0,1} < {0,1,2} (prefix), {0,2} < {1}
  EXPECT_LT(Face::of({0, 1}), Face::of({0, 1, 2}));
  EXPECT_LT(Face::of({0, 2}), Face::of({1}));
  EXPECT_EQ(Face::of({2, 0}).members(), (std::vector<int>{0, 2}));
}

TEST(MonomialIdeal, MinimalizeDropsMultiples) {
  // x^2 y divides x^3 y
  MonomialIdeal i = MonomialIdeal::minimalize(2, {ev({2, 1}), ev({3, 1})});
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{ev({2, 1})}));
}

TEST(MonomialIdeal, ZeroAndUnitIdeals) {
  MonomialIdeal zero = MonomialIdeal::minimalize(3, {});
  EXPECT_TRUE(zero.is_zero_ideal());
  EXPECT_EQ(zero.staircase_bounds(), ev({0, 0, 0}));
  EXPECT_FALSE(zero.contains(ev({5, 5, 5})));

  MonomialIdeal unit = MonomialIdeal::minimalize(2, {ev({0, 0}), ev({1, 2})});
  EXPECT_TRUE(unit.is_unit_ideal());
  EXPECT_TRUE(unit.contains(ev({0, 0})));
}

TEST(MonomialIdeal, MembershipExamples) {
  MonomialIdeal i = MonomialIdeal::minimalize(2, {ev({2, 1})});
  EXPECT_TRUE(i.contains(ev({3, 1})));
  EXPECT_FALSE(i.contains(ev({1, 5})));
  EXPECT_THROW(i.contains(ev({1})), input_error);
  EXPECT_EQ(i.staircase_bounds(), ev({2, 1}));
}

TEST(MonomialIdeal, MinimalizeErrorsOnMixedLengths) {
  EXPECT_THROW(MonomialIdeal::minimalize(2, {ev({1, 0}), ev({1, 0, 0})}),
               input_error);
}

TEST(MonomialIdeal, MinimalizeIdempotentAndOrderIndependent) {
  std::mt19937 rng(20240'001);
  for (int trial = 0; trial < 50; ++trial) {
    MonomialIdeal i = oracle::random_ideal(rng);
    std::vector<ExponentVector> gens = i.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    MonomialIdeal again = MonomialIdeal::minimalize(i.var_count(), gens);
    EXPECT_EQ(i, again);
  }
}

TEST(MonomialIdeal, MembershipUpwardClosedAndAgreesWithScan) {
  std::mt19937 rng(20240'002);
  std::uniform_int_distribution<int> ed(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    MonomialIdeal i = oracle::random_ideal(rng);
    const int n = i.var_count();
    for (int s = 0; s < 20; ++s) {
      std::vector<int> a(static_cast<size_t>(n)), g(static_cast<size_t>(n));
      for (auto& x : a) x = ed(rng);
      for (auto& x : g) x = ed(rng);
      ExponentVector pt(a), shift(g);
      bool member = i.contains(pt);
      bool scan = false;
      for (const auto& gen : i.generators()) scan |= gen.divides(pt);
      EXPECT_EQ(member, scan);
      if (member) EXPECT_TRUE(i.contains(pt + shift));
    }
  }
}

}  // namespace
