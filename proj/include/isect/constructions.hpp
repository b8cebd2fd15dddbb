#pragma once

// Builders for the extremal families. Each builder has a matching membership
// predicate so containment can be tested without materializing the family.

#include <string>
#include <utility>

#include "isect/setcore.hpp"

namespace isect {

using FamilyPair = std::pair<Family, Family>;

namespace detail {

inline void require_universe(int n, SetMask s, const char* name) {
  require(s.universe() == n, std::string(name) + " lives in a different universe");
}

}  // namespace detail

/// {H : X subset H, |H cap M| >= d+1} together with all k-subsets of M.
struct HParams {
  int n = 0, k = 0, d = 0;
  SetMask X, M;

  void validate() const {
    detail::require(n >= 2 * k, "H: needs n >= 2k");
    detail::require(d >= 1 && k > d, "H: needs k > d >= 1");
    detail::require_universe(n, X, "X");
    detail::require_universe(n, M, "M");
    detail::require(X.size() == d, "H: |X| must equal d");
    detail::require(M.size() == k + 1, "H: |M| must equal k+1");
    detail::require(M.contains(X), "H: X must be a subset of M");
  }
  bool contains(SetMask f) const {
    return f.size() == k && ((f.contains(X) && (f & M).size() >= d + 1) || M.contains(f));
  }
};

/// {A : |A cap Z| >= d+1} with |Z| = d+2.
struct AParams {
  int n = 0, k = 0, d = 0;
  SetMask Z;

  void validate() const {
    detail::require(n >= 2 * k, "A: needs n >= 2k");
    detail::require(d >= 1 && k > d, "A: needs k > d >= 1");
    detail::require_universe(n, Z, "Z");
    detail::require(Z.size() == d + 2, "A: |Z| must equal d+2");
  }
  bool contains(SetMask f) const { return f.size() == k && (f & Z).size() >= d + 1; }
};

/// Chain X subset M subset C with |X| = t, |M| = k, |C| = c.
struct H1Params {
  int n = 0, k = 0, t = 0;
  SetMask X, M, C;

  int c() const { return C.size(); }

  void validate() const {
    detail::require(n >= 2 * k, "H1: needs n >= 2k");
    detail::require(t >= 1 && k >= t + 1, "H1: needs k >= t+1 >= 2");
    detail::require_universe(n, X, "X");
    detail::require_universe(n, M, "M");
    detail::require_universe(n, C, "C");
    detail::require(X.size() == t, "H1: |X| must equal t");
    detail::require(M.size() == k, "H1: |M| must equal k");
    detail::require(M.contains(X) && C.contains(M), "H1: needs X subset M subset C");
    const int cc = c();
    detail::require((cc >= k + 1 && cc <= 2 * k - t) || cc == n,
                    "H1: |C| must lie in {k+1, ..., 2k-t} or equal n");
  }

  bool in_E1(SetMask f) const { return f.size() == k && f.contains(X) && (f & M).size() >= t + 1; }
  bool in_E2(SetMask f) const {
    return f.size() == k && (f & M) == X && (f & C).size() == c() - k + t;
  }
  bool in_E3(SetMask f) const {
    return f.size() == k && C.contains(f) && (f & X).size() == t - 1 && (f & M).size() == k - 1;
  }
  bool contains(SetMask f) const { return in_E1(f) || in_E2(f) || in_E3(f); }
};

inline Family build_H(const HParams& p) {
  p.validate();
  return k_subsets_where(p.n, p.k, [&](SetMask f) { return p.contains(f); });
}

inline Family build_A(const AParams& p) {
  p.validate();
  return k_subsets_where(p.n, p.k, [&](SetMask f) { return p.contains(f); });
}

inline Family build_E1(const H1Params& p) {
  p.validate();
  return k_subsets_where(p.n, p.k, [&](SetMask f) { return p.in_E1(f); });
}
inline Family build_E2(const H1Params& p) {
  p.validate();
  return k_subsets_where(p.n, p.k, [&](SetMask f) { return p.in_E2(f); });
}
inline Family build_E3(const H1Params& p) {
  p.validate();
  return k_subsets_where(p.n, p.k, [&](SetMask f) { return p.in_E3(f); });
}

/// E1 u E2 u E3.
inline Family build_H1(const H1Params& p) {
  p.validate();
  return k_subsets_where(p.n, p.k, [&](SetMask f) { return p.contains(f); });
}

/// All k-sets containing X.
inline Family build_star(int n, int k, SetMask X) {
  detail::require_universe(n, X, "X");
  detail::require(X.size() <= k && k <= n, "star: needs |X| <= k <= n");
  return k_subsets_where(n, k, [X](SetMask f) { return f.contains(X); });
}

/// All k-sets meeting T in at least t points.
inline Family build_threshold(int n, int k, int t, SetMask T) {
  detail::require_universe(n, T, "T");
  detail::require(t >= 0 && t <= T.size() && t <= k && k <= n,
                  "threshold: needs 0 <= t <= min(|T|, k)");
  return k_subsets_where(n, k, [T, t](SetMask f) { return (f & T).size() >= t; });
}

/// All k-subsets of M.
inline Family build_complete(int n, int k, SetMask M) {
  detail::require_universe(n, M, "M");
  detail::require(k >= 0 && k <= M.size(), "complete: needs k <= |M|");
  return k_subsets_where(n, k, [M](SetMask f) { return M.contains(f); });
}

namespace detail {

inline void validate_cross_kernel(int n, int k1, int k2, int t, SetMask X, SetMask M) {
  require_universe(n, X, "X");
  require_universe(n, M, "M");
  require(t >= 1 && k1 >= k2 && k2 >= t + 1, "cross pair: needs k1 >= k2 >= t+1, t >= 1");
  require(k1 <= n, "cross pair: needs k1 <= n");
  require(X.size() == t, "cross pair: |X| must equal t");
  require(M.contains(X), "cross pair: X must be a subset of M");
}

}  // namespace detail

/// F1 = {F : X subset F, |F cap M| >= t+1} (k1-sets),
/// F2 = {F : X subset F} u C(M, k2) (k2-sets), with |M| = k2+1.
inline FamilyPair build_cross_pair_ia(int n, int k1, int k2, int t, SetMask X, SetMask M) {
  detail::validate_cross_kernel(n, k1, k2, t, X, M);
  detail::require(M.size() == k2 + 1, "cross pair: |M| must equal k2+1");
  Family left =
      k_subsets_where(n, k1, [&](SetMask f) { return f.contains(X) && (f & M).size() >= t + 1; });
  Family right =
      k_subsets_where(n, k2, [&](SetMask f) { return f.contains(X) || M.contains(f); });
  return {std::move(left), std::move(right)};
}

/// Mirror of the (ia) pair, only defined for k1 = k2.
inline FamilyPair build_cross_pair_ib(int n, int k, int t, SetMask X, SetMask M) {
  auto [left, right] = build_cross_pair_ia(n, k, k, t, X, M);
  return {std::move(right), std::move(left)};
}

/// F1 = all k1-sets containing T, F2 = all k2-sets meeting T in >= t points,
/// with |T| = t+1.
inline FamilyPair build_cross_pair_threshold(int n, int k1, int k2, int t, SetMask T) {
  detail::require(T.size() == t + 1, "threshold pair: |T| must equal t+1");
  detail::require(t >= 1 && k1 >= t + 1 && k2 >= t, "threshold pair: needs k1 >= t+1, k2 >= t");
  return {build_star(n, k1, T), build_threshold(n, k2, t, T)};
}

}  // namespace isect
