#pragma once

// Exact maximum r-wise t-intersecting families by branch and bound over the
// k-subsets of [n] in increasing mask order.
//
// A node holds the chosen members K (increasing indices), the running
// intersection of K, the distinct intersections of at most r-2 members of K,
// and the candidate set C of larger indices that can each be added to K
// without breaking the r-wise condition. Every subfamily is reached by at
// most one path, so collecting nodes of maximum size yields all optima.
//
// Top-level branch 0 runs first; its optimum seeds an independent bound for
// each remaining branch. Node counts therefore do not depend on the number of
// worker threads.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "isect/index_set.hpp"
#include "isect/search/report.hpp"
#include "isect/verify.hpp"

namespace isect {

struct RwiseOptions {
  bool require_nontrivial = true;
  std::uint64_t budget = default_budget();  ///< node cap
  int jobs = 1;
  int max_n = 10;
  bool use_size_bound = true;
  bool use_trivial_dead = true;
  bool use_pair_filter = true;
  bool reduce_isomorphs = false;
  int estimate_probes = 256;
  std::uint64_t estimate_seed = 0x5eed;
};

namespace detail {

/// Families in which any r_feas members share t_feas points, optionally
/// non-trivial with respect to t_nt.
class RwiseEngine {
 public:
  RwiseEngine(int n, int k, int r_feas, int t_feas, bool nontrivial, int t_nt, int pair_t,
              const RwiseOptions& opt)
      : n_(n), r_(r_feas), t_(t_feas), nontrivial_(nontrivial), t_nt_(t_nt), opt_(opt) {
    for_each_k_subset_of(universe_bits(n), k, [&](std::uint64_t m) { verts_.push_back(m); });
    const int count = static_cast<int>(verts_.size());
    adj_.resize(verts_.size());
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (i != j && (!opt.use_pair_filter || std::popcount(verts_[i] & verts_[j]) >= pair_t))
          adj_[i].set(j);
  }

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  std::uint64_t vertex(int i) const { return verts_[i]; }

  struct Branch {
    int best = 0;
    std::vector<std::vector<int>> witnesses;
    std::uint64_t nodes = 0;
    std::map<std::string, std::uint64_t> pruned;
    bool aborted = false;
  };

  /// Explores all families whose smallest member index is `v`.
  Branch run_branch(int v, int seed_best, std::atomic<std::uint64_t>& total_nodes) const {
    Branch b;
    b.best = seed_best;
    b.pruned["size_bound"] = 0;
    b.pruned["trivial_dead"] = 0;
    b.pruned["pair_filter"] = 0;
    Frame root;
    root.inter = universe_bits(n_);
    root.cand = IndexSet::first_n(vertex_count());
    std::vector<int> chosen{v};
    Context ctx{b, total_nodes, chosen};
    dfs(extend(root, v, b), ctx);
    return b;
  }

  /// Knuth's random-probe estimate of the tree size without bound pruning.
  double estimate(int probes, std::uint64_t seed) const {
    if (vertex_count() == 0 || probes <= 0) return 1;
    std::mt19937_64 rng(seed);
    Branch scratch;
    double total = 0;
    for (int p = 0; p < probes; ++p) {
      Frame f;
      f.inter = universe_bits(n_);
      f.cand = IndexSet::first_n(vertex_count());
      double weight = 1;
      double sum = 1;
      for (;;) {
        const int d = f.cand.count();
        if (d == 0) break;
        weight *= d;
        sum += weight;
        std::uniform_int_distribution<int> pick(0, d - 1);
        int target = pick(rng);
        int chosen = -1;
        f.cand.for_each([&](int i) {
          if (target-- == 0) chosen = i;
        });
        f = extend(f, chosen, scratch);
      }
      total += sum;
    }
    return total / probes;
  }

 private:
  struct Frame {
    std::uint64_t inter = 0;
    IndexSet cand;
    std::vector<std::vector<std::uint64_t>> levels;  // levels[j]: meets of <= j+1 members
    int size = 0;
  };
  struct Context {
    Branch& b;
    std::atomic<std::uint64_t>& total;
    std::vector<int>& chosen;
  };

  /// Adds vertex v to the node, keeping only candidates above v that remain
  /// feasible.
  Frame extend(const Frame& f, int v, Branch& b) const {
    Frame g;
    const std::uint64_t mv = verts_[v];
    g.size = f.size + 1;
    g.inter = f.inter & mv;
    // New intersections of at most r-1 members that involve v.
    std::vector<std::uint64_t> delta{mv};
    const int depth = r_ - 2;
    if (depth >= 1) {
      if (!f.levels.empty())
        for (auto s : f.levels[depth - 1]) delta.push_back(s & mv);
      g.levels.resize(depth);
      for (int j = 0; j < depth; ++j) {
        auto& lv = g.levels[j];
        if (!f.levels.empty()) lv = f.levels[j];
        lv.push_back(mv);
        if (j > 0 && !f.levels.empty())
          for (auto s : f.levels[j - 1]) lv.push_back(s & mv);
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
      }
    }
    std::sort(delta.begin(), delta.end());
    delta.erase(std::unique(delta.begin(), delta.end()), delta.end());

    IndexSet cand = f.cand;
    cand.drop_through(v);
    if (opt_.use_pair_filter) {
      const int before = cand.count();
      cand &= adj_[v];
      b.pruned["pair_filter"] += static_cast<std::uint64_t>(before - cand.count());
    }
    IndexSet kept;
    cand.for_each([&](int c) {
      const std::uint64_t mc = verts_[c];
      for (auto s : delta)
        if (std::popcount(s & mc) < t_) return;
      kept.set(c);
    });
    g.cand = kept;
    return g;
  }

  void dfs(const Frame& f, Context& ctx) const {
    Branch& b = ctx.b;
    if (b.aborted) return;
    ++b.nodes;
    if (ctx.total.fetch_add(1, std::memory_order_relaxed) + 1 > opt_.budget) {
      b.aborted = true;
      return;
    }
    if (!nontrivial_ || std::popcount(f.inter) < t_nt_) {
      if (f.size > b.best) {
        b.best = f.size;
        b.witnesses.clear();
      }
      if (f.size == b.best) b.witnesses.push_back(ctx.chosen);
    }
    const int width = f.cand.count();
    if (width == 0) return;
    if (opt_.use_size_bound && f.size + width < b.best) {
      ++b.pruned["size_bound"];
      return;
    }
    if (nontrivial_ && opt_.use_trivial_dead) {
      std::uint64_t meet = f.inter;
      f.cand.for_each([&](int c) { meet &= verts_[c]; });
      if (std::popcount(meet) >= t_nt_) {
        ++b.pruned["trivial_dead"];
        return;
      }
    }
    int remaining = width;
    f.cand.for_each([&](int c) {
      if (b.aborted) return;
      if (opt_.use_size_bound && f.size + remaining < b.best) return;
      --remaining;
      Frame g = extend(f, c, b);
      ctx.chosen.push_back(c);
      dfs(g, ctx);
      ctx.chosen.pop_back();
    });
  }

  int n_, r_, t_;
  bool nontrivial_;
  int t_nt_;
  RwiseOptions opt_;
  std::vector<std::uint64_t> verts_;
  std::vector<IndexSet> adj_;
};

/// Signature invariant under relabeling of [n]: the sorted multiset of
/// per-member sorted degree lists.
inline std::vector<std::vector<int>> relabel_signature(const Family& f) {
  std::vector<int> deg(static_cast<std::size_t>(f.universe()) + 1, 0);
  for (SetMask m : f)
    for (int e : m.elements()) ++deg[e];
  std::vector<std::vector<int>> sig;
  for (SetMask m : f) {
    std::vector<int> row;
    for (int e : m.elements()) row.push_back(deg[e]);
    std::sort(row.begin(), row.end());
    sig.push_back(std::move(row));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

inline std::vector<Family> reduce_by_signature(const std::vector<Family>& in) {
  std::vector<Family> out;
  std::vector<std::vector<std::vector<int>>> seen;
  for (const auto& f : in) {
    auto sig = relabel_signature(f);
    if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
    seen.push_back(std::move(sig));
    out.push_back(f);
  }
  return out;
}

/// Runs an engine over every top-level branch and merges the results.
inline void run_engine(const RwiseEngine& eng, const RwiseOptions& opt, int n, int k,
                       SearchReport& rep) {
  const int count = eng.vertex_count();
  std::atomic<std::uint64_t> total{0};
  std::vector<RwiseEngine::Branch> branches(static_cast<std::size_t>(count));
  if (count > 0) {
    branches[0] = eng.run_branch(0, 0, total);
    const int seed = branches[0].best;
    std::atomic<int> next{1};
    auto worker = [&] {
      for (int v = next.fetch_add(1); v < count; v = next.fetch_add(1))
        branches[v] = eng.run_branch(v, seed, total);
    };
    const int jobs = std::max(1, std::min(opt.jobs, count));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  rep.nodes = 1;  // root
  rep.pruned_by = {{"size_bound", 0}, {"trivial_dead", 0}, {"pair_filter", 0}};
  int best = 0;
  bool aborted = false;
  for (const auto& b : branches) {
    rep.nodes += b.nodes;
    for (const auto& [name, c] : b.pruned) rep.pruned_by[name] += c;
    best = std::max(best, b.best);
    aborted = aborted || b.aborted;
  }
  if (aborted) {
    rep.status = "refused";
    rep.reason = "node budget of " + std::to_string(opt.budget) + " exceeded";
    return;
  }
  rep.optimum = best;
  if (best == 0) {
    rep.status = "none";
    rep.reason = "no family satisfies the constraints";
    return;
  }
  for (const auto& b : branches) {
    if (b.best != best) continue;
    for (const auto& w : b.witnesses) {
      std::vector<SetMask> members;
      for (int i : w) members.emplace_back(n, eng.vertex(i));
      rep.witnesses.push_back(Family::from_members(n, k, std::move(members)));
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const Family& a, const Family& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
            });
}

inline SearchReport run_rwise_search(int n, int k, int t, int r, bool nontrivial, int r_feas,
                                     int t_feas, int pair_t, const RwiseOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.kind = "rwise";
  rep.params = RwiseParams{n, k, t, r};
  rep.require_nontrivial = nontrivial;
  require(r >= 2, "max_rwise needs r >= 2");
  require(t >= 1, "max_rwise needs t >= 1");
  require(n >= 1 && k >= 0 && k <= n, "max_rwise needs 0 <= k <= n");
  auto finish = [&] {
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
  };
  if (k < t) {
    rep.status = "empty";
    rep.reason = "k < t: no k-set has t elements";
    return finish();
  }
  if (n > opt.max_n) {
    rep.status = "refused";
    rep.reason = "n = " + std::to_string(n) + " exceeds the guardrail max_n = " +
                 std::to_string(opt.max_n);
    return finish();
  }
  if (binomial(n, k) > IndexSet::kCapacity) {
    rep.status = "refused";
    rep.reason = "C(n,k) exceeds " + std::to_string(IndexSet::kCapacity) + " vertices";
    return finish();
  }
  RwiseEngine eng(n, k, r_feas, t_feas, nontrivial, t, pair_t, opt);
  rep.estimate = eng.estimate(opt.estimate_probes, opt.estimate_seed);
  run_engine(eng, opt, n, k, rep);
  return finish();
}

}  // namespace detail

/// Maximum (optionally non-trivial) r-wise t-intersecting families of
/// k-subsets of [n], with every optimum witness.
inline SearchReport max_rwise(int n, int k, int t, int r, const RwiseOptions& opt = {}) {
  const int pair_t = opt.require_nontrivial ? t + r - 2 : t;
  SearchReport rep =
      detail::run_rwise_search(n, k, t, r, opt.require_nontrivial, r, t, pair_t, opt);
  if (rep.status == "ok" && opt.require_nontrivial && k == t + r - 1) {
    bool all_complete = true;
    for (const auto& w : rep.witnesses) {
      const SetMask m = family_union(w);
      all_complete = all_complete && m.size() == k + 1 &&
                     w.size() == static_cast<std::size_t>(k + 1);
    }
    rep.checks["complete_on_k_plus_1_set"] = all_complete ? "pass" : "fail";
  }
  if (rep.status == "ok" && opt.reduce_isomorphs) {
    rep.witnesses = detail::reduce_by_signature(rep.witnesses);
    rep.checks["isomorph_reduction"] = "signature";
  }
  return rep;
}

/// Optimum of the pairwise (t+r-2)-intersecting relaxation, still required to
/// be non-trivial with respect to t. Never below the r-wise optimum.
inline SearchReport max_rwise_relaxation(int n, int k, int t, int r, const RwiseOptions& opt = {}) {
  return detail::run_rwise_search(n, k, t, r, true, 2, t + r - 2, t + r - 2, opt);
}

}  // namespace isect
