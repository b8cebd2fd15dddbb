#include <gtest/gtest.h>

#include <sstream>

#include "isect/family_io.hpp"
#include "isect/index_set.hpp"
#include "isect/setcore.hpp"
#include "test_util.hpp"

using namespace isect;

TEST(SetMask, ElementsRoundTrip) {
  const SetMask s = SetMask::of(8, {1, 4, 8});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.elements(), (std::vector<int>{1, 4, 8}));
  EXPECT_TRUE(s.has(4));
  EXPECT_FALSE(s.has(2));
  EXPECT_EQ(s.to_string(), "1,4,8");
}

TEST(SetMask, RejectsOutOfRange) {
  EXPECT_THROW(SetMask::of(5, {0}), parameter_error);
  EXPECT_THROW(SetMask::of(5, {6}), parameter_error);
}

TEST(SetMask, Algebra) {
  const SetMask a = SetMask::of(6, {1, 2, 3});
  const SetMask b = SetMask::of(6, {3, 4});
  EXPECT_EQ((a & b), SetMask::of(6, {3}));
  EXPECT_EQ((a | b), SetMask::of(6, {1, 2, 3, 4}));
  EXPECT_EQ((a - b), SetMask::of(6, {1, 2}));
  EXPECT_TRUE(a.contains(SetMask::of(6, {2, 3})));
  EXPECT_TRUE(SetMask::prefix(6, 2).subset_of(a));
}

TEST(KSubsets, MatchOracleAndOrder) {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      const Family f = enumerate_k_subsets(n, k);
      const auto want = oracle::k_subsets(n, k);
      ASSERT_EQ(to_bits(f), want) << n << " " << k;
      for (std::size_t i = 1; i < f.size(); ++i) EXPECT_LT(f[i - 1].bits(), f[i].bits());
    }
}

TEST(KSubsets, DepositOntoGround) {
  const std::uint64_t ground = 0b101101;
  std::vector<std::uint64_t> got;
  for_each_k_subset_of(ground, 2, [&](std::uint64_t m) { got.push_back(m); });
  ASSERT_EQ(got.size(), 6u);
  for (auto m : got) {
    EXPECT_EQ(m & ~ground, 0u);
    EXPECT_EQ(std::popcount(m), 2);
  }
}

TEST(Family, CanonicalAndDeduplicated) {
  const Family f = Family::from_members(
      5, 2, {SetMask::of(5, {2, 3}), SetMask::of(5, {1, 2}), SetMask::of(5, {2, 3})});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], SetMask::of(5, {1, 2}));
  EXPECT_THROW(Family::from_members(5, 2, {SetMask::of(5, {1})}), parameter_error);
}

TEST(Family, SetOperations) {
  const Family all = enumerate_k_subsets(5, 2);
  const Family star = restrict(all, SetMask::of(5, {1}));
  EXPECT_EQ(star.size(), 4u);
  EXPECT_EQ(family_intersection(star), SetMask::of(5, {1}));
  EXPECT_EQ(family_union(star), SetMask::full(5));
  EXPECT_EQ(family_difference(all, star).size(), 6u);
  EXPECT_EQ(family_meet(all, star), star);
  EXPECT_TRUE(star.is_subfamily_of(all));
}

TEST(FamilyIo, RoundTrip) {
  const Family f = restrict(enumerate_k_subsets(6, 3), SetMask::of(6, {2}));
  EXPECT_EQ(parse_family(format_family(f)), f);
  EXPECT_EQ(parse_family("# comment\n4 2\n1,2\n\n3,4\n"),
            Family::from_members(4, 2, {SetMask::of(4, {1, 2}), SetMask::of(4, {3, 4})}));
}

TEST(FamilyIo, RejectsBadInput) {
  EXPECT_THROW(parse_family(""), parameter_error);
  EXPECT_THROW(parse_family("4 2\n2,1\n"), parameter_error);
  EXPECT_THROW(parse_family("4 2\n1,x\n"), parameter_error);
  EXPECT_THROW(parse_family("4 2\n1,2,3\n"), parameter_error);
  EXPECT_THROW(parse_family("4 2\n1,5\n"), parameter_error);
}

TEST(IndexSet, Basics) {
  IndexSet s = IndexSet::first_n(130);
  EXPECT_EQ(s.count(), 130);
  EXPECT_TRUE(s.test(129));
  EXPECT_FALSE(s.test(130));
  s.drop_through(63);
  EXPECT_EQ(s.first(), 64);
  IndexSet t;
  t.set(64);
  t.set(200);
  EXPECT_EQ((s & t).count(), 1);
  EXPECT_TRUE((s & t).subset_of(t));
  std::vector<int> seen;
  t.for_each([&](int i) { seen.push_back(i); });
  EXPECT_EQ(seen, (std::vector<int>{64, 200}));
  t.reset(64);
  t.reset(200);
  EXPECT_TRUE(t.none());
}
