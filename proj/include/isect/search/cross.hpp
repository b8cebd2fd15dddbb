#pragma once

// Closed pairs of the relation R(A, B) <=> |A cap B| >= t between the
// k1-subsets and the k2-subsets of [n], enumerated once each with Ganter's
// NextClosure over the left side.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "isect/index_set.hpp"
#include "isect/search/report.hpp"
#include "isect/verify.hpp"

namespace isect {

struct CrossOptions {
  bool require_nontrivial = true;
  int max_n = 7;
  std::uint64_t concept_budget = 2'000'000ULL;
};

/// Bipartite relation between k1-sets and k2-sets, indexed in increasing
/// mask order on each side.
class ConceptLattice {
 public:
  ConceptLattice(int n, int k1, int k2, int t) : n_(n), k1_(k1), k2_(k2) {
    for_each_k_subset_of(universe_bits(n), k1, [&](std::uint64_t m) { left_.push_back(m); });
    for_each_k_subset_of(universe_bits(n), k2, [&](std::uint64_t m) { right_.push_back(m); });
    rows_.resize(left_.size());
    cols_.resize(right_.size());
    for (std::size_t i = 0; i < left_.size(); ++i)
      for (std::size_t j = 0; j < right_.size(); ++j)
        if (std::popcount(left_[i] & right_[j]) >= t) {
          rows_[i].set(static_cast<int>(j));
          cols_[j].set(static_cast<int>(i));
        }
  }

  int left_count() const { return static_cast<int>(left_.size()); }
  int right_count() const { return static_cast<int>(right_.size()); }
  std::uint64_t left_mask(int i) const { return left_[i]; }
  std::uint64_t right_mask(int j) const { return right_[j]; }
  const IndexSet& row(int i) const { return rows_[i]; }
  const IndexSet& column(int j) const { return cols_[j]; }

  /// Right-hand partners of a left index set.
  IndexSet up(const IndexSet& s) const {
    IndexSet out = IndexSet::first_n(right_count());
    s.for_each([&](int i) { out &= rows_[i]; });
    return out;
  }
  IndexSet down(const IndexSet& s) const {
    IndexSet out = IndexSet::first_n(left_count());
    s.for_each([&](int j) { out &= cols_[j]; });
    return out;
  }

  /// Calls fn(extent, intent) for every closed pair in lectic order of the
  /// extent. Stops early and returns false when fn returns false.
  template <typename Fn>
  bool for_each_concept(Fn&& fn) const {
    const int count = left_count();
    IndexSet a = down(up(IndexSet{}));
    if (!fn(a, up(a))) return false;
    for (;;) {
      bool advanced = false;
      for (int i = count - 1; i >= 0; --i) {
        if (a.test(i)) {
          a.reset(i);
          continue;
        }
        IndexSet seed = a;
        seed.set(i);
        const IndexSet intent = up(seed);
        const IndexSet b = down(intent);
        // Accept when the closure adds nothing below i.
        IndexSet low_b = b & IndexSet::first_n(i);
        if (low_b == a) {
          a = b;
          advanced = true;
          if (!fn(a, intent)) return false;
          break;
        }
      }
      if (!advanced) return true;
    }
  }

  Family left_family(const IndexSet& s) const { return collect(s, left_, k1_); }
  Family right_family(const IndexSet& s) const { return collect(s, right_, k2_); }

 private:
  Family collect(const IndexSet& s, const std::vector<std::uint64_t>& pool, int k) const {
    std::vector<SetMask> out;
    s.for_each([&](int i) { out.emplace_back(n_, pool[i]); });
    return Family::from_members(n_, k, std::move(out));
  }

  int n_, k1_, k2_;
  std::vector<std::uint64_t> left_, right_;
  std::vector<IndexSet> rows_, cols_;
};

/// Every closed pair with both sides nonempty (and non-trivial if requested),
/// together with the pairs of maximum product.
inline SearchReport cross_concepts(int n, int k1, int k2, int t, const CrossOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.kind = "cross";
  rep.params = CrossParams{n, k1, k2, t};
  rep.require_nontrivial = opt.require_nontrivial;
  detail::require(t >= 1, "cross_concepts needs t >= 1");
  detail::require(n >= 1 && k1 >= 0 && k1 <= n && k2 >= 0 && k2 <= n,
                  "cross_concepts needs 0 <= k1, k2 <= n");
  auto finish = [&] {
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
  };
  const ExactInt n1 = binomial(n, k1);
  const ExactInt n2 = binomial(n, k2);
  rep.estimate = std::pow(2.0, std::min(n1.convert_to<double>(), n2.convert_to<double>()));
  if (n > opt.max_n) {
    rep.status = "refused";
    rep.reason = "n = " + std::to_string(n) + " exceeds the guardrail max_n = " +
                 std::to_string(opt.max_n);
    return finish();
  }
  if (n1 > IndexSet::kCapacity || n2 > IndexSet::kCapacity) {
    rep.status = "refused";
    rep.reason = "C(n,k1) or C(n,k2) exceeds " + std::to_string(IndexSet::kCapacity);
    return finish();
  }
  if (k1 < t || k2 < t) {
    rep.status = "empty";
    rep.reason = "k1 < t or k2 < t: no pair with both sides nonempty";
    return finish();
  }

  ConceptLattice lattice(n, k1, k2, t);
  std::uint64_t seen = 0;
  std::uint64_t dropped_empty = 0;
  std::uint64_t dropped_trivial = 0;
  const bool complete = lattice.for_each_concept([&](const IndexSet& ext, const IndexSet& in) {
    if (++seen > opt.concept_budget) return false;
    if (ext.none() || in.none()) {
      ++dropped_empty;
      return true;
    }
    ConceptPair p{lattice.left_family(ext), lattice.right_family(in)};
    if (opt.require_nontrivial && !is_nontrivial_pair({p.left, p.right, t})) {
      ++dropped_trivial;
      return true;
    }
    rep.closed_pairs.push_back(std::move(p));
    return true;
  });
  rep.nodes = seen;
  rep.pruned_by = {{"empty_side", dropped_empty}, {"trivial", dropped_trivial}};
  if (!complete) {
    rep.status = "refused";
    rep.reason = "concept budget of " + std::to_string(opt.concept_budget) + " exceeded";
    rep.closed_pairs.clear();
    return finish();
  }
  if (dropped_empty > 0) rep.conventions_used.push_back("pairs-with-an-empty-side-excluded");

  std::sort(rep.closed_pairs.begin(), rep.closed_pairs.end(),
            [](const ConceptPair& a, const ConceptPair& b) {
              auto lex = [](const Family& x, const Family& y) {
                return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
              };
              if (a.left != b.left) return lex(a.left, b.left);
              return lex(a.right, b.right);
            });
  for (const auto& p : rep.closed_pairs) {
    const ExactInt prod = p.product();
    if (prod > rep.optimum) {
      rep.optimum = prod;
      rep.witness_pairs.clear();
    }
    if (prod == rep.optimum) rep.witness_pairs.push_back(p);
  }
  if (rep.closed_pairs.empty()) {
    rep.status = "none";
    rep.reason = "no closed pair passes the filter";
  }
  return finish();
}

}  // namespace isect
