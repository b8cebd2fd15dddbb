#include <gtest/gtest.h>

#include <set>

#include "isect/formulas.hpp"
#include "isect/search/census.hpp"
#include "isect/search/cross.hpp"
#include "isect/search/rwise.hpp"
#include "test_util.hpp"

using namespace isect;

namespace {

std::vector<oracle::Bits> witness_bits(const SearchReport& rep) {
  std::vector<oracle::Bits> out;
  for (const auto& w : rep.witnesses) out.push_back(to_bits(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Rwise, MatchesOracleSmall) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      if (binomial(n, k) > 15) continue;
      for (int t = 1; t <= k; ++t)
        for (int r = 2; r <= 4; ++r)
          for (bool nt : {true, false}) {
            RwiseOptions opt;
            opt.require_nontrivial = nt;
            const SearchReport rep = max_rwise(n, k, t, r, opt);
            const auto want = oracle::max_rwise(n, k, t, r, nt);
            ASSERT_NE(rep.status, "refused");
            EXPECT_EQ(rep.optimum, ExactInt(want.optimum)) << n << k << t << r << nt;
            if (want.optimum == 0) {
              EXPECT_EQ(rep.status, "none");
            } else {
              EXPECT_EQ(witness_bits(rep), want.witnesses) << n << k << t << r << nt;
            }
          }
    }
}

TEST(Rwise, DeskOptimum) {
  const SearchReport rep = max_rwise(6, 3, 1, 2);
  EXPECT_EQ(rep.optimum, h1(1, 3, 4, 6));
  EXPECT_EQ(rep.status, "ok");
}

TEST(Rwise, SameAnswerForAnyJobCount) {
  RwiseOptions one, many;
  many.jobs = 4;
  const SearchReport a = max_rwise(7, 3, 1, 3, one);
  const SearchReport b = max_rwise(7, 3, 1, 3, many);
  EXPECT_EQ(a.optimum, b.optimum);
  EXPECT_EQ(witness_bits(a), witness_bits(b));
}

TEST(Rwise, PruningDoesNotChangeAnswer) {
  RwiseOptions off;
  off.use_size_bound = off.use_trivial_dead = off.use_pair_filter = false;
  for (auto [n, k, t, r] : std::vector<std::array<int, 4>>{{5, 2, 1, 2}, {6, 3, 1, 3}, {6, 4, 2, 2}}) {
    const SearchReport a = max_rwise(n, k, t, r);
    const SearchReport b = max_rwise(n, k, t, r, off);
    EXPECT_EQ(a.optimum, b.optimum);
    EXPECT_EQ(witness_bits(a), witness_bits(b));
    EXPECT_LE(a.nodes, b.nodes);
  }
}

TEST(Rwise, NoFamilyWhenRTooLarge) {
  const SearchReport rep = max_rwise(7, 3, 1, 4);  // r > k - t + 1
  EXPECT_EQ(rep.status, "none");
  EXPECT_EQ(rep.optimum, 0);
}

TEST(Rwise, CompleteFamilyCase) {
  const SearchReport rep = max_rwise(6, 3, 2, 2);  // k = t + r - 1
  EXPECT_EQ(rep.checks.at("complete_on_k_plus_1_set"), "pass");
  EXPECT_EQ(rep.witnesses.size(), static_cast<std::size_t>(binomial(6, 4)));
}

TEST(Rwise, Guardrails) {
  EXPECT_EQ(max_rwise(11, 2, 1, 2).status, "refused");
  EXPECT_EQ(max_rwise(10, 5, 1, 2).status, "refused");  // C(10,5) > 256
  RwiseOptions tiny;
  tiny.budget = 10;
  const SearchReport rep = max_rwise(7, 3, 1, 2, tiny);
  EXPECT_EQ(rep.status, "refused");
  EXPECT_FALSE(rep.reason.empty());
  EXPECT_GT(rep.estimate, 0);
  EXPECT_EQ(max_rwise(6, 1, 2, 2).status, "empty");
}

TEST(Rwise, RelaxationIsAnUpperBound) {
  for (auto [n, k, t, r] :
       std::vector<std::array<int, 4>>{{6, 3, 1, 3}, {7, 4, 1, 3}, {7, 4, 2, 3}, {6, 4, 1, 4}}) {
    const SearchReport exact = max_rwise(n, k, t, r);
    const SearchReport relaxed = max_rwise_relaxation(n, k, t, r);
    EXPECT_GE(relaxed.optimum, exact.optimum) << n << k << t << r;
  }
}

TEST(Rwise, IsomorphReductionKeepsOptimum) {
  RwiseOptions opt;
  opt.reduce_isomorphs = true;
  const SearchReport rep = max_rwise(6, 3, 1, 2, opt);
  EXPECT_EQ(rep.optimum, 10);
  EXPECT_LT(rep.witnesses.size(), max_rwise(6, 3, 1, 2).witnesses.size());
}

TEST(Cross, MatchesOracleSmall) {
  for (int t = 1; t <= 2; ++t)
    for (int k2 = t; k2 <= 3; ++k2)
      for (int k1 = k2; k1 <= 3; ++k1)
        for (int n = k1 + 1; n <= 6; ++n) {
          const oracle::Relation rel(n, k1, k2, t);
          if (std::min(rel.left.size(), rel.right.size()) > 20) continue;
          CrossOptions opt;
          opt.require_nontrivial = false;
          const SearchReport rep = cross_concepts(n, k1, k2, t, opt);
          ASSERT_EQ(rep.status == "refused", false);
          std::set<std::pair<oracle::Bits, oracle::Bits>> want, got;
          for (auto [a, b] : oracle::maximal_pairs_by_subsets(rel)) {
            if (a == 0 || b == 0) continue;
            oracle::Bits l, r;
            for (std::size_t i = 0; i < rel.left.size(); ++i)
              if (a >> i & 1) l.push_back(rel.left[i]);
            for (std::size_t j = 0; j < rel.right.size(); ++j)
              if (b >> j & 1) r.push_back(rel.right[j]);
            want.emplace(l, r);
          }
          for (const auto& p : rep.closed_pairs) got.emplace(to_bits(p.left), to_bits(p.right));
          EXPECT_EQ(got, want) << n << k1 << k2 << t;
        }
}

TEST(Cross, NontrivialOptimumEqualsG1) {
  const SearchReport rep = cross_concepts(5, 2, 2, 1);
  EXPECT_EQ(rep.optimum, g(1, 2, 2, 5, 1));
  const SearchReport rep2 = cross_concepts(6, 3, 2, 1);
  EXPECT_EQ(rep2.optimum, g(1, 3, 2, 6, 1));
  for (const auto& p : rep2.witness_pairs) {
    EXPECT_TRUE(is_maximal_pair({p.left, p.right, 1}));
    EXPECT_TRUE(is_nontrivial_pair({p.left, p.right, 1}));
  }
}

TEST(Cross, Guardrails) {
  EXPECT_EQ(cross_concepts(8, 2, 2, 1).status, "refused");
  CrossOptions small;
  small.concept_budget = 5;
  EXPECT_EQ(cross_concepts(6, 3, 2, 1, small).status, "refused");
  EXPECT_EQ(cross_concepts(6, 1, 1, 2).status, "empty");
}

TEST(Census, EveryPairClassified) {
  CrossOptions opt;
  opt.require_nontrivial = false;
  const SearchReport rep = cross_concepts(6, 3, 2, 1, opt);
  const CensusTable table = covering_number_census(rep);
  EXPECT_EQ(table.rows.size(), rep.closed_pairs.size());
  long total = 0;
  for (int c = 1; c <= 5; ++c) total += table.case_counts[c];
  EXPECT_EQ(total, static_cast<long>(rep.closed_pairs.size()));
  for (const auto& p : rep.closed_pairs) {
    EXPECT_TRUE(min_covers_cross_intersect(p, 1));
    EXPECT_TRUE(within_cover_bound(p, 6, 1));
  }
}

TEST(Report, JsonShape) {
  SearchReport rep = max_rwise(5, 2, 1, 2);
  const auto j = to_json(rep, {false, false});
  EXPECT_EQ(j["optimum"], "3");
  EXPECT_EQ(j["wall_ms"], 0);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["witnesses"].size(), rep.witnesses.size());
}
