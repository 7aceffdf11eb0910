#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "galmod/abelian_group.hpp"
#include "galmod/error.hpp"
#include "generators.hpp"

using namespace galmod;

TEST(AbelianGroup, InvariantFactorsFromCyclicFactors) {
  EXPECT_EQ(FiniteAbelianGroup({15}).invariant_factors(), (std::vector<long>{15}));
  EXPECT_EQ(FiniteAbelianGroup({3, 5}).invariant_factors(), (std::vector<long>{15}));
  EXPECT_EQ(FiniteAbelianGroup({9, 3}).invariant_factors(), (std::vector<long>{3, 9}));
  EXPECT_EQ(FiniteAbelianGroup({3, 15, 5}).invariant_factors(), (std::vector<long>{15, 15}));
  EXPECT_EQ(FiniteAbelianGroup::parse("3,9").order(), 27);
  EXPECT_EQ(FiniteAbelianGroup::parse("3,9").exponent(), 9);
}

TEST(AbelianGroup, RejectsEvenAndTrivialFactors) {
  EXPECT_THROW(FiniteAbelianGroup({1}), Error);
  EXPECT_THROW(FiniteAbelianGroup({4}), Error);
  EXPECT_THROW(FiniteAbelianGroup({3, 6}), Error);
  EXPECT_THROW(FiniteAbelianGroup::parse("3,x"), Error);
}

TEST(AbelianGroup, ElementOrderExamples) {
  FiniteAbelianGroup c9({9});
  EXPECT_EQ(element_order(c9, {3}), 3);
  EXPECT_EQ(element_order(c9, c9.identity()), 1);
  FiniteAbelianGroup g({3, 9});
  EXPECT_EQ(element_order(g, {1, 3}), 3);
  try {
    element_order(g, {3, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidElement);
  }
  EXPECT_THROW(element_order(g, {1}), Error);
}

TEST(AbelianGroup, ElementOrderMatchesRepeatedAddition) {
  for (const char* spec : {"3", "9", "3,3", "3,9", "15", "5,5", "27"}) {
    auto g = FiniteAbelianGroup::parse(spec);
    for (const auto& s : g.elements()) {
      long n = 1;
      auto acc = s;
      while (acc != g.identity()) {
        acc = g.add(acc, s);
        ++n;
      }
      EXPECT_EQ(element_order(g, s), n);
      EXPECT_EQ(g.order() % n, 0);
      EXPECT_EQ(n % 2, 1);
    }
  }
}

TEST(AbelianGroup, BoundedOrderSubgroup) {
  FiniteAbelianGroup c3({3});
  EXPECT_EQ(bounded_order_subgroup(c3, 2), (std::vector<GroupElement>{{0}}));
  EXPECT_EQ(bounded_order_subgroup(c3, 3).size(), 3u);
  FiniteAbelianGroup g({3, 9});
  auto sub = bounded_order_subgroup(g, 6);
  std::vector<GroupElement> expected;
  for (long a = 0; a < 3; ++a)
    for (long b : {0, 3, 6}) expected.push_back({a, b});
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(sub, expected);
  EXPECT_TRUE(std::is_sorted(sub.begin(), sub.end()));
}

TEST(AbelianGroup, BoundedOrderSubgroupDependsOnGcdWithExponent) {
  for (const char* spec : {"3,9", "15", "5,5", "27"}) {
    auto g = FiniteAbelianGroup::parse(spec);
    for (long d = 1; d <= 40; ++d) {
      auto sub = bounded_order_subgroup(g, d);
      EXPECT_EQ(sub, bounded_order_subgroup(g, gcd(d, g.exponent())));
      std::set<GroupElement> set(sub.begin(), sub.end());
      for (const auto& a : sub)
        for (const auto& b : sub) EXPECT_TRUE(set.count(g.add(a, b)));
    }
  }
}

TEST(AbelianGroup, TwistExamples) {
  FiniteAbelianGroup c3({3});
  EXPECT_EQ(twist_action(c3, {1}, 2, 0), (GroupElement{1}));
  EXPECT_EQ(twist_action(c3, {1}, 2, -1), (GroupElement{2}));
  EXPECT_EQ(twist_action(c3, {0}, 2, 5), (GroupElement{0}));
  try {
    twist_action(c3, {1}, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTwist);
  }
}

TEST(AbelianGroup, TwistIsAutomorphismAndInvertible) {
  for (const char* spec : {"3,9", "15", "5,5", "7"}) {
    auto g = FiniteAbelianGroup::parse(spec);
    for (long k = 1; k < 2 * g.exponent(); ++k) {
      if (gcd(k, g.exponent()) != 1) continue;
      for (long n : {-2, -1, 1, 2}) {
        std::set<GroupElement> image;
        for (const auto& s : g.elements()) {
          auto ts = twist_action(g, s, k, n);
          image.insert(ts);
          EXPECT_EQ(twist_action(g, ts, k, -n), s);
          for (const auto& t : g.elements())
            if (t[0] % 2 == 0) EXPECT_EQ(twist_action(g, g.add(s, t), k, n), g.add(ts, twist_action(g, t, k, n)));
        }
        EXPECT_EQ(static_cast<long>(image.size()), g.order());
      }
    }
  }
}

TEST(AbelianGroup, EnumerationIsLexicographic) {
  auto g = FiniteAbelianGroup::parse("3,9");
  auto els = g.elements();
  EXPECT_TRUE(std::is_sorted(els.begin(), els.end()));
  for (std::size_t i = 0; i < els.size(); ++i) EXPECT_EQ(g.index_of(els[i]), i);
  EXPECT_EQ(g.parse_element("2,7"), (GroupElement{2, 7}));
}
