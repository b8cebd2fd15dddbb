#include <gtest/gtest.h>

#include "isect/formulas.hpp"
#include "isect/inequalities.hpp"

using namespace isect;

// Values fixed by hand before the implementation existed.
TEST(Frozen, H1) {
  EXPECT_EQ(h1(1, 2, 3, 6), 3);
  EXPECT_EQ(h1(1, 3, 4, 6), 10);  // C(5,2) - C(3,2) + C(2,1) + 1
}

TEST(Frozen, H2) {
  EXPECT_EQ(h2(3, 2, 5), 3);
  EXPECT_EQ(h2(3, 3, 6), 10);  // 3 C(4,1) - 2 C(3,0)
}

TEST(Frozen, CrossValues) {
  EXPECT_EQ(g(1, 2, 2, 5, 1), 10);
  EXPECT_EQ(cross_product_threshold(3, 3, 1), 38);
}

TEST(Binomial, EdgeCases) {
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(60, 30), ExactInt("118264581564861424"));
  EXPECT_EQ(to_string(binomial(200, 100)),
            "90548514656103281165404177077484163874504589675413336841320");
}

TEST(H1, ReducesAtCEqualsN) {
  // At c = n the C(n-c, 2k-c-d) term vanishes.
  for (long n = 6; n <= 12; ++n)
    for (long k = 3; 2 * k <= n; ++k)
      for (long d = 1; d < k; ++d)
        EXPECT_EQ(h1(d, k, n, n),
                  binomial(n - d, k - d) - binomial(n - k, k - d) + ExactInt(d) * (n - k));
}

TEST(H1, KMinusTwoMatchesH2) {
  for (long n = 8; n <= 14; ++n)
    for (long k = 3; 2 * k <= n; ++k) EXPECT_EQ(h1(k - 2, k, n, n), h2(k, k, n));
}

TEST(H1, RejectsIllegalC) {
  EXPECT_THROW(h1(1, 3, 6, 8), parameter_error);  // 2k-d = 5 < 6 < n
  EXPECT_THROW(h1(1, 3, 4, 5), parameter_error);  // n < 2k
}

TEST(GTilde, ClosedFormOfG2) {
  for (long t = 1; t <= 3; ++t)
    for (long k2 = t + 1; k2 <= 6; ++k2)
      for (long k1 = k2; k1 <= 7; ++k1)
        for (long n = k1 + k2 + 2; n <= 30; n += 3) {
          const ExactRat want = ExactRat(ExactInt((t + 1) * (n - k2)), ExactInt(k2 - t)) + 1;
          EXPECT_EQ(g_tilde(2, k1, k2, n, t), want);
        }
}

TEST(GTilde, LowerBoundOfG6) {
  for (long t = 1; t <= 3; ++t)
    for (long k2 = t + 1; k2 <= 6; ++k2)
      for (long k1 = k2; k1 <= 7; ++k1)
        for (long n = k1 + k2 + 2; n <= 30; n += 3) {
          const ExactRat exact = ExactRat(ExactInt(k2 - t + 1)) *
                                 (ExactRat(ExactInt(n - t), ExactInt(k2 - t)) -
                                  ExactRat(ExactInt(k1 - t), 2) +
                                  ExactRat(ExactInt(n - k1), ExactInt(2 * (n - t - 1))));
          EXPECT_EQ(g_tilde(6, k1, k2, n, t), exact);
        }
}

TEST(Formulas, GIndexChecked) {
  EXPECT_THROW(g(7, 3, 2, 10, 1), parameter_error);
  EXPECT_THROW(g(0, 3, 2, 10, 1), parameter_error);
}

TEST(Formulas, F2NegativePower) {
  // m = t: k^(-2) (k-t+1)^2 C(t,t) C(n-t,l-t)
  EXPECT_EQ(f2(1, 3, 2, 10, 1), ExactRat(ExactInt(9 * 9), ExactInt(9)));
  EXPECT_EQ(f2(3, 3, 3, 10, 1), ExactRat(ExactInt(9 * 3)));
}

TEST(Formulas, BoundFamilySizeBranches) {
  EXPECT_EQ(bound_family_size(2, 1, 10, 3, 3, 1), 2 * binomial(9, 2));
  EXPECT_EQ(bound_family_size(2, 2, 10, 3, 3, 1), 3 * 2 * binomial(8, 1));
  EXPECT_EQ(bound_family_size(2, 3, 10, 3, 3, 1), 9 * 2 * binomial(7, 0));
  EXPECT_THROW(bound_family_size(0, 1, 10, 3, 3, 1), parameter_error);
}

TEST(Hypotheses, RwiseMaximum) {
  EXPECT_TRUE(hypotheses(Theorem::rwise_maximum, RwiseParams{20, 5, 1, 3}));  // 3*2 < 20
  EXPECT_FALSE(hypotheses(Theorem::rwise_maximum, RwiseParams{6, 5, 1, 3}));
  EXPECT_FALSE(hypotheses(Theorem::rwise_maximum, RwiseParams{100, 5, 1, 2}));
}

TEST(Hypotheses, CrossExclusions) {
  EXPECT_FALSE(hypotheses(Theorem::cross_product, CrossParams{100000, 4, 4, 2}));
  EXPECT_FALSE(hypotheses(Theorem::cross_product, CrossParams{100000, 2, 2, 1}));
  EXPECT_TRUE(hypotheses(Theorem::cross_product, CrossParams{38, 3, 3, 1}));
  EXPECT_FALSE(hypotheses(Theorem::cross_product, CrossParams{37, 3, 3, 1}));
  EXPECT_THROW(hypotheses(Theorem::cross_product, RwiseParams{10, 3, 1, 2}), parameter_error);
}

TEST(Inequalities, IdsAndNamesParse) {
  for (Inequality q : kAllInequalities) {
    EXPECT_EQ(parse_inequality(inequality_id(q)), q);
    EXPECT_EQ(parse_inequality(inequality_name(q)), q);
  }
  EXPECT_FALSE(parse_inequality("4.11").has_value());
}

TEST(Inequalities, DichotomyAtSample) {
  const auto v = check_inequality_lemma(Inequality::g1_g2_dichotomy, 6, 5, 200, 2);
  EXPECT_EQ(v.status, InequalityVerdict::Status::holds);
  EXPECT_TRUE(v.n_meets_threshold);
}

TEST(Inequalities, HypothesesUnmet) {
  // Lemma on k2 = 2t does not apply at k2 = 2t+1.
  const auto v = check_inequality_lemma(Inequality::g2_over_g1_at_2t, 5, 5, 500, 2);
  EXPECT_EQ(v.status, InequalityVerdict::Status::hypotheses_unmet);
}

TEST(Inequalities, FirstChainIsOnlyWeakWhenK1IsTPlusOne) {
  // Both sides of the upper comparison equal 2n here.
  const long t = 2, k = 3, n = 50;
  const ExactInt cap = (k - t + 1) * binomial(n - t - 1, k - t - 1) * (binomial(n - t, k - t) + t);
  EXPECT_EQ(g(1, k, k, n, t), cap);
  EXPECT_EQ(check_inequality_lemma(Inequality::g6_below_g1_below_cap, k, k, n, t).status,
            InequalityVerdict::Status::fails);
}

TEST(Monotone, SpotChecks) {
  EXPECT_TRUE(gw_increasing(100, 5, 4, 3, 2));
  EXPECT_TRUE(f2_decreasing(f2_threshold(4, 4, 2), 4, 4, 2));
  EXPECT_TRUE(fprime_nondecreasing(fprime_threshold(5, 4, 1), 5, 4, 1));
  EXPECT_THROW(gw_increasing(100, 3, 4, 3, 2), parameter_error);
}
