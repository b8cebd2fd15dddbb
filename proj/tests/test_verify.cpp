#include <gtest/gtest.h>

#include <random>

#include "isect/constructions.hpp"
#include "isect/family_io.hpp"
#include "isect/verify.hpp"
#include "test_util.hpp"

using namespace isect;

namespace {

Family random_family(std::mt19937_64& rng, int n, int k, double p) {
  std::bernoulli_distribution keep(p);
  return filter(enumerate_k_subsets(n, k), [&](SetMask) { return keep(rng); });
}

}  // namespace

TEST(Rwise, AgreesWithOracleOnRandomFamilies) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 4 + trial % 4;
    const int k = 2 + trial % (n - 2);
    const int t = 1 + trial % 2;
    const int r = 2 + trial % 3;
    const Family f = random_family(rng, n, k, 0.15 + 0.1 * (trial % 3));
    EXPECT_EQ(is_r_wise_t_intersecting(f, r, t), oracle::rwise(to_bits(f), r, t, n) || f.empty())
        << format_family(f);
    EXPECT_EQ(is_nontrivial(f, t), f.empty() ? false : oracle::nontrivial(to_bits(f), t, n));
  }
}

TEST(Rwise, RepetitionMatters) {
  // Three sets pairwise meeting in one point, with no common point.
  const Family tri = Family::from_members(
      4, 2, {SetMask::of(4, {1, 2}), SetMask::of(4, {2, 3}), SetMask::of(4, {1, 3})});
  EXPECT_TRUE(is_r_wise_t_intersecting(tri, 2, 1));
  EXPECT_FALSE(is_r_wise_t_intersecting(tri, 3, 1));
  // A single member is r-wise t-intersecting for every r once k >= t.
  const Family one = Family::from_members(4, 2, {SetMask::of(4, {1, 2})});
  EXPECT_TRUE(is_r_wise_t_intersecting(one, 5, 2));
  EXPECT_FALSE(is_r_wise_t_intersecting(one, 5, 3));
}

TEST(Rwise, EmptyFamilyConvention) {
  EXPECT_TRUE(is_r_wise_t_intersecting(Family(5, 2), 3, 2));
  EXPECT_FALSE(is_r_wise_t_intersecting(Family(5, 2), 3, 3));
  EXPECT_FALSE(is_nontrivial(Family(5, 2), 1));
}

TEST(Covers, MatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    const int k = 2 + trial % (n - 2);
    const int t = 1 + trial % 2;
    const Family f = random_family(rng, n, k, 0.3);
    if (f.empty()) continue;
    const CoverCertificate c = covering_number(f, t);
    EXPECT_EQ(c.size, oracle::covering_number(to_bits(f), t, n));
    EXPECT_TRUE(is_t_cover(f, c.cover, t));
    EXPECT_EQ(c.cover.size(), c.size);
    EXPECT_EQ(to_bits(min_covers(f, t)), oracle::min_covers(to_bits(f), t, n));
  }
}

TEST(Covers, EmptyFamily) {
  const CoverCertificate c = covering_number(Family(6, 3), 2);
  EXPECT_EQ(c.size, 0);
  EXPECT_TRUE(c.by_convention);
}

TEST(Maximal, StarAndHiltonMilner) {
  const int n = 7, k = 3;
  const Family star = build_star(n, k, SetMask::of(n, {1}));
  EXPECT_TRUE(is_maximal_rwise(star, 2, 1));
  const Family h = build_H({n, k, 1, SetMask::of(n, {1}), SetMask::prefix(n, 4)});
  EXPECT_TRUE(is_maximal_rwise(h, 2, 1));
  // Dropping a member of a star leaves it extendable.
  std::vector<SetMask> members(star.begin() + 1, star.end());
  EXPECT_FALSE(is_maximal_rwise(Family::from_members(n, k, members), 2, 1));
  EXPECT_THROW(is_maximal_rwise(enumerate_k_subsets(n, k), 2, 1), contract_error);
}

TEST(Maximal, CrossPairs) {
  auto [a, b] = build_cross_pair_ia(6, 2, 2, 1, SetMask::of(6, {1}), SetMask::prefix(6, 3));
  EXPECT_TRUE(is_maximal_pair({a, b, 1}));
  EXPECT_TRUE(is_nontrivial_pair({a, b, 1}));
  const Family sa = build_star(6, 2, SetMask::of(6, {1}));
  EXPECT_TRUE(is_maximal_pair({sa, sa, 1}));
  EXPECT_FALSE(is_nontrivial_pair({sa, sa, 1}));
  EXPECT_FALSE(is_maximal_pair({a, sa, 1}));
}

TEST(Dual, IsCrossPartnerSet) {
  const Family f = build_threshold(6, 3, 1, SetMask::prefix(6, 2));
  const Family d = dual(f, 2, 1);
  EXPECT_TRUE(is_cross_t_intersecting({f, d, 1}));
  for (SetMask a : enumerate_k_subsets(6, 2)) {
    if (!d.contains(a)) {
      EXPECT_FALSE(is_t_cover(f, a, 1));
    }
  }
}

TEST(Pair, UniverseMismatch) {
  EXPECT_THROW(is_cross_t_intersecting({Family(5, 2), Family(6, 2), 1}), parameter_error);
}
