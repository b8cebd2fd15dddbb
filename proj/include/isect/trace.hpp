#pragma once

// Traceability runner: every claim in the manifest is checked once per run
// and reported as pass, fail or skipped, with a plain-text evidence file.

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isect/constructions.hpp"
#include "isect/family_io.hpp"
#include "isect/inequalities.hpp"
#include "isect/search/census.hpp"
#include "isect/search/cross.hpp"
#include "isect/search/rwise.hpp"
#include "isect/verify.hpp"

namespace isect {

struct TraceEntry {
  std::string claim;
  std::string kind;    ///< identity | property | inequality | search
  std::string status;  ///< pass | fail | skipped
  std::string evidence;
  std::string detail;
};

struct TraceOptions {
  std::string suite = "core";  ///< core | full
  std::string out_dir;         ///< evidence directory; empty keeps evidence in memory only
  std::uint64_t budget = default_budget();
};

/// Counts checks and remembers the first failure.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  std::string summary() const {
    std::ostringstream os;
    os << "checked=" << checked << " failed=" << failed;
    if (failed) os << " first_failure=" << first_failure;
    for (const auto& n : notes) os << "\n" << n;
    return os.str();
  }
};

/// Search results shared by the claims of one run.
struct TraceCorpus {
  struct Rwise {
    RwiseParams p;
    SearchReport report;
  };
  struct Cross {
    CrossParams p;
    SearchReport report;
  };
  std::vector<Rwise> rwise;
  std::vector<Cross> cross;
  std::vector<std::string> refused;

  static TraceCorpus build(const TraceOptions& opt) {
    TraceCorpus c;
    const bool full = opt.suite == "full";
    const int max_n_rwise = full ? 7 : 6;
    for (int n = 2; n <= max_n_rwise; ++n)
      for (int k = 1; k < n; ++k)
        for (int t = 1; t <= std::min(k, 2); ++t)
          for (int r = 2; r <= 4; ++r) {
            RwiseOptions ro;
            ro.budget = opt.budget;
            SearchReport rep = max_rwise(n, k, t, r, ro);
            if (rep.status == "refused") {
              c.refused.push_back("rwise " + describe(n, k, t, r) + ": " + rep.reason);
              continue;
            }
            c.rwise.push_back({RwiseParams{n, k, t, r}, std::move(rep)});
          }
    const int max_n_cross = full ? 7 : 6;
    CrossOptions co;
    co.require_nontrivial = false;
    co.concept_budget = full ? 2'000'000 : 100'000;
    for (int t = 1; t <= 2; ++t)
      for (int k2 = t + 1; k2 <= 3; ++k2)
        for (int k1 = k2; k1 <= 3; ++k1)
          for (int n = k1 + k2; n <= max_n_cross; ++n) {
            SearchReport rep = cross_concepts(n, k1, k2, t, co);
            if (rep.status == "refused") {
              c.refused.push_back("cross " + describe(n, k1, k2, t) + ": " + rep.reason);
              continue;
            }
            c.cross.push_back({CrossParams{n, k1, k2, t}, std::move(rep)});
          }
    return c;
  }

  static std::string describe(long a, long b, long c, long d) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
  }
};

struct TraceClaim {
  std::string id;
  std::string kind;
  std::function<Tally(const TraceOptions&, const TraceCorpus&)> check;
};

namespace detail {

inline std::string fam_text(const Family& f) {
  std::string out;
  for (SetMask m : f) out += "{" + m.to_string() + "}";
  return out;
}

/// Every legal (n,k,t,c) chain for the Family I constructions.
template <typename Fn>
void for_each_h1_params(int max_n, Fn&& fn) {
  for (int n = 4; n <= max_n; ++n)
    for (int k = 2; 2 * k <= n && k <= 5; ++k)
      for (int t = 1; t < k; ++t)
        for (int c = k + 1; c <= n; ++c) {
          if (!((c <= 2 * k - t) || c == n)) continue;
          fn(H1Params{n, k, t, SetMask::prefix(n, t), SetMask::prefix(n, k), SetMask::prefix(n, c)});
        }
}

inline std::vector<TraceClaim> build_manifest() {
  std::vector<TraceClaim> m;
  m.push_back({"member-size-lower-bound", "search", [](const TraceOptions&, const TraceCorpus& c) {
                 Tally t;
                 for (const auto& e : c.rwise)
                   if (e.report.status == "ok" && e.report.require_nontrivial)
                     t.check(e.p.k >= e.p.t + e.p.r - 1,
                             "witness with k < t+r-1 at " +
                                 TraceCorpus::describe(e.p.n, e.p.k, e.p.t, e.p.r));
                 return t;
               }});
  m.push_back({"no-nontrivial-family-when-r-exceeds-k-t-plus-1", "search",
               [](const TraceOptions&, const TraceCorpus& c) {
                 Tally t;
                 for (const auto& e : c.rwise)
                   if (e.p.r > e.p.k - e.p.t + 1)
                     t.check(e.report.status == "none",
                             "family found at " + TraceCorpus::describe(e.p.n, e.p.k, e.p.t, e.p.r));
                 return t;
               }});
  m.push_back({"rwise-implies-pairwise-t-plus-r-minus-2", "property",
               [](const TraceOptions& opt, const TraceCorpus& c) {
                 Tally t;
                 auto probe = [&](const Family& f, int r, int tt) {
                   if (is_r_wise_t_intersecting(f, r, tt) && is_nontrivial(f, tt))
                     t.check(is_r_wise_t_intersecting(f, 2, tt + r - 2), fam_text(f));
                 };
                 for (const auto& e : c.rwise)
                   for (const auto& w : e.report.witnesses)
                     probe(w, static_cast<int>(e.p.r), static_cast<int>(e.p.t));
                 std::mt19937_64 rng(20240611);
                 const int samples = opt.suite == "full" ? 5000 : 1000;
                 for (int s = 0; s < samples; ++s) {
                   const int n = std::uniform_int_distribution<int>(4, 8)(rng);
                   const int k = std::uniform_int_distribution<int>(2, n - 1)(rng);
                   const int tt = std::uniform_int_distribution<int>(1, std::min(k, 2))(rng);
                   const int r = std::uniform_int_distribution<int>(2, 4)(rng);
                   const Family all = enumerate_k_subsets(n, k);
                   // Grow a random r-wise family greedily so the premise holds often.
                   std::vector<SetMask> members;
                   std::vector<std::size_t> order(all.size());
                   for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                   std::shuffle(order.begin(), order.end(), rng);
                   for (std::size_t i : order) {
                     members.push_back(all[i]);
                     if (!is_r_wise_t_intersecting(Family::from_members(n, k, members), r, tt))
                       members.pop_back();
                   }
                   probe(Family::from_members(n, k, members), r, tt);
                 }
                 return t;
               }});
  m.push_back({"constructions-are-nontrivial-rwise", "property",
               [](const TraceOptions& opt, const TraceCorpus&) {
                 Tally t;
                 const int max_n = opt.suite == "full" ? 12 : 10;
                 for (int n = 4; n <= max_n; ++n)
                   for (int k = 2; 2 * k <= n && k <= 5; ++k)
                     for (int tt = 1; tt < k; ++tt)
                       for (int r = 2; tt + r - 2 < k; ++r) {
                         const int d = tt + r - 2;
                         if (d < 1) continue;
                         const Family h = build_H(
                             {n, k, d, SetMask::prefix(n, d), SetMask::prefix(n, k + 1)});
                         const Family a = build_A({n, k, d, SetMask::prefix(n, d + 2)});
                         const std::string at = TraceCorpus::describe(n, k, tt, r);
                         t.check(is_r_wise_t_intersecting(h, r, tt) && is_nontrivial(h, tt),
                                 "H at " + at);
                         t.check(is_r_wise_t_intersecting(a, r, tt) && is_nontrivial(a, tt),
                                 "A at " + at);
                       }
                 return t;
               }});
  m.push_back({"k-equals-t-plus-r-minus-1-gives-complete-family", "search",
               [](const TraceOptions&, const TraceCorpus& c) {
                 Tally t;
                 for (const auto& e : c.rwise) {
                   if (e.report.status != "ok" || !e.report.require_nontrivial ||
                       e.p.k != e.p.t + e.p.r - 1)
                     continue;
                   const auto it = e.report.checks.find("complete_on_k_plus_1_set");
                   t.check(it != e.report.checks.end() && it->second == "pass",
                           "non-complete optimum at " +
                               TraceCorpus::describe(e.p.n, e.p.k, e.p.t, e.p.r));
                 }
                 return t;
               }});
  m.push_back({"family-i-at-c-k-plus-1-equals-h", "identity",
               [](const TraceOptions& opt, const TraceCorpus&) {
                 Tally t;
                 for_each_h1_params(opt.suite == "full" ? 12 : 10, [&](const H1Params& p) {
                   if (p.c() != p.k + 1) return;
                   const Family h = build_H({p.n, p.k, p.t, p.X, p.C});
                   t.check(build_H1(p) == h, "n=" + std::to_string(p.n) + " k=" +
                                                 std::to_string(p.k) + " t=" + std::to_string(p.t));
                 });
                 return t;
               }});
  m.push_back({"family-i-size", "identity", [](const TraceOptions& opt, const TraceCorpus&) {
                 Tally t;
                 for_each_h1_params(opt.suite == "full" ? 12 : 10, [&](const H1Params& p) {
                   const Family e1 = build_E1(p), e2 = build_E2(p), e3 = build_E3(p);
                   const std::string at = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                                          " t=" + std::to_string(p.t) +
                                          " c=" + std::to_string(p.c());
                   t.check(ExactInt(build_H1(p).size()) == h1(p.t, p.k, p.c(), p.n), "size " + at);
                   t.check(family_meet(e1, e2).empty() && family_meet(e1, e3).empty() &&
                               family_meet(e2, e3).empty(),
                           "overlap " + at);
                 });
                 return t;
               }});
  m.push_back({"family-i-with-full-c", "identity", [](const TraceOptions& opt, const TraceCorpus&) {
                 Tally t;
                 for_each_h1_params(opt.suite == "full" ? 12 : 10, [&](const H1Params& p) {
                   if (p.c() != p.n) return;
                   const Family h = build_H1(p);
                   const std::string at = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                                          " t=" + std::to_string(p.t);
                   t.check(build_E2(p).empty() && h == family_union(build_E1(p), build_E3(p)),
                           "E1 u E3 " + at);
                   if (p.t == p.k - 2)
                     t.check(h == build_A({p.n, p.k, p.k - 2, p.M}), "A(k,k-1,M) " + at);
                 });
                 return t;
               }});
  m.push_back({"e2-members-contain-c-minus-m", "property",
               [](const TraceOptions& opt, const TraceCorpus&) {
                 Tally t;
                 for_each_h1_params(opt.suite == "full" ? 12 : 10, [&](const H1Params& p) {
                   for (SetMask f : build_E2(p))
                     t.check(f.contains(p.C - p.M) && (f & (p.C - p.M)).size() == p.c() - p.k,
                             f.to_string());
                 });
                 return t;
               }});
  m.push_back({"min-covers-cross-intersect", "property",
               [](const TraceOptions&, const TraceCorpus& c) {
                 Tally t;
                 for (const auto& e : c.cross)
                   for (const auto& pr : e.report.closed_pairs)
                     t.check(min_covers_cross_intersect(pr, static_cast<int>(e.p.t)),
                             fam_text(pr.left) + " / " + fam_text(pr.right));
                 return t;
               }});
  auto monotone = [](const char* which) {
    return [which](const TraceOptions& opt, const TraceCorpus&) {
      Tally t;
      const std::string w = which;
      const long span = opt.suite == "full" ? 40 : 10;
      for (long tt = 1; tt <= 3; ++tt)
        for (long k = tt + 1; k <= tt + 5; ++k)
          for (long l = tt; l <= tt + 5; ++l) {
            const long thr = w == "gw"   ? gw_threshold(k, l, tt)
                             : w == "f2" ? f2_threshold(k, l, tt)
                                         : fprime_threshold(k, l, tt);
            for (long n = std::max(thr, k + l); n <= std::max(thr, k + l) + span; n += 5) {
              const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                     " l=" + std::to_string(l) + " t=" + std::to_string(tt);
              if (w == "gw") {
                for (long s = tt; s < k; ++s)
                  t.check(gw_increasing(n, k, l, s, tt), at + " s=" + std::to_string(s));
              } else if (w == "f2") {
                t.check(f2_decreasing(n, k, l, tt), at);
              } else {
                t.check(fprime_nondecreasing(n, k, l, tt), at);
              }
            }
          }
      return t;
    };
  };
  m.push_back({"gw-increasing", "inequality", monotone("gw")});
  m.push_back({"f2-decreasing", "inequality", monotone("f2")});
  m.push_back({"fprime-nondecreasing", "inequality", monotone("fprime")});
  m.push_back({"cover-size-bound", "property", [](const TraceOptions&, const TraceCorpus& c) {
                 Tally t;
                 t.notes.push_back("desk-scale n lies below the n threshold of this bound");
                 for (const auto& e : c.cross)
                   for (const auto& pr : e.report.closed_pairs)
                     t.check(within_cover_bound(pr, static_cast<int>(e.p.n), static_cast<int>(e.p.t)),
                             fam_text(pr.left) + " / " + fam_text(pr.right));
                 return t;
               }});
  m.push_back({"cover-product-bound", "property", [](const TraceOptions&, const TraceCorpus& c) {
                 Tally t;
                 t.notes.push_back("desk-scale n lies below the n threshold of this bound");
                 for (const auto& e : c.cross) {
                   const long n = e.p.n, tt = e.p.t;
                   for (const auto& pr : e.report.closed_pairs) {
                     const int a = covering_number(pr.left, static_cast<int>(tt)).size;
                     const int b = covering_number(pr.right, static_cast<int>(tt)).size;
                     const Family& f = a <= b ? pr.left : pr.right;
                     const Family& g_ = a <= b ? pr.right : pr.left;
                     const int mf = std::min(a, b), mg = std::max(a, b);
                     const ExactInt prod = pr.product();
                     const std::string what = fam_text(pr.left) + " / " + fam_text(pr.right);
                     if (mf == tt && mg >= tt + 2) t.check(prod <= g(4, g_.k(), f.k(), n, tt), what);
                     if (mf >= tt + 1) t.check(prod < g(5, f.k(), g_.k(), n, tt), what);
                   }
                 }
                 return t;
               }});
  for (Inequality q : kAllInequalities) {
    m.push_back({std::string(inequality_name(q)), "inequality",
                 [q](const TraceOptions& opt, const TraceCorpus&) {
                   Tally t;
                   const long span = opt.suite == "full" ? 50 : 10;
                   for (long tt = 1; tt <= 3; ++tt)
                     for (long k2 = tt + 1; k2 <= 8; ++k2)
                       for (long k1 = k2; k1 <= 10; ++k1) {
                         if (is_exceptional_cross_tuple(k1, k2, tt)) continue;
                         const long thr = cross_product_threshold(k1, k2, tt);
                         for (long n = thr; n <= thr + span; ++n) {
                           const auto v = check_inequality_lemma(q, k1, k2, n, tt);
                           if (v.status == InequalityVerdict::Status::hypotheses_unmet) break;
                           t.check(v.status == InequalityVerdict::Status::holds,
                                   "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                                       " n=" + std::to_string(n) + " t=" + std::to_string(tt));
                         }
                       }
                   return t;
                 }});
  }
  m.push_back({"cross-construction-products", "identity",
               [](const TraceOptions& opt, const TraceCorpus&) {
                 Tally t;
                 const int max_k = opt.suite == "full" ? 8 : 6;
                 const int max_n = opt.suite == "full" ? 14 : 12;
                 for (int tt = 1; tt <= 3; ++tt)
                   for (int k2 = tt + 1; k2 <= max_k; ++k2)
                     for (int k1 = k2; k1 <= max_k; ++k1)
                       for (int n = k1 + k2; n <= max_n; ++n) {
                         const std::string at = TraceCorpus::describe(n, k1, k2, tt);
                         auto [a, b] = build_cross_pair_ia(n, k1, k2, tt, SetMask::prefix(n, tt),
                                                           SetMask::prefix(n, k2 + 1));
                         t.check(ExactInt(a.size()) * b.size() == g(1, k1, k2, n, tt), "g1 " + at);
                         auto [c, d] =
                             build_cross_pair_threshold(n, k1, k2, tt, SetMask::prefix(n, tt + 1));
                         t.check(ExactInt(c.size()) * d.size() == g(2, k1, k2, n, tt), "g2 " + at);
                       }
                 return t;
               }});
  return m;
}

}  // namespace detail

inline const std::vector<TraceClaim>& trace_manifest() {
  static const std::vector<TraceClaim> manifest = detail::build_manifest();
  return manifest;
}

inline std::vector<TraceEntry> run_trace(const TraceOptions& opt) {
  detail::require(opt.suite == "core" || opt.suite == "full", "trace suite must be core or full");
  const TraceCorpus corpus = TraceCorpus::build(opt);
  std::vector<TraceEntry> out;
  for (const auto& claim : trace_manifest()) {
    const Tally tally = claim.check(opt, corpus);
    TraceEntry e;
    e.claim = claim.id;
    e.kind = claim.kind;
    e.status = tally.checked == 0 ? "skipped" : tally.failed == 0 ? "pass" : "fail";
    e.detail = tally.summary();
    if (!corpus.refused.empty() && (claim.kind == "search" || claim.kind == "property"))
      e.detail += "\nrefused instances: " + std::to_string(corpus.refused.size());
    if (!opt.out_dir.empty()) {
      const std::filesystem::path dir = std::filesystem::path(opt.out_dir) / "evidence";
      std::filesystem::create_directories(dir);
      const auto file = dir / (claim.id + ".txt");
      std::ofstream os(file);
      os << claim.id << " [" << claim.kind << "] " << e.status << "\n" << e.detail << "\n";
      for (const auto& r : corpus.refused) os << "refused: " << r << "\n";
      e.evidence = file.string();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace isect
