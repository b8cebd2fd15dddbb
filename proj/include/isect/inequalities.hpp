#pragma once

// Exact checkers for the comparisons between the product bounds g1..g6 that
// drive the cross t-intersecting product theorem. Every checker takes n
// explicitly; the verdict reports separately whether n reaches the standing
// threshold max{t+1,k2-t}(t+1)(k1-t+1)(k2-t+1)+t+1.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "isect/formulas.hpp"

namespace isect {

enum class Inequality {
  g6_below_g1_below_cap,  ///< g6 < g1 < (k2-t+1) C(n-t-1,k1-t-1) (C(n-t,k2-t)+t)
  g1_over_g2_wide,        ///< k2 >= 2t+1: g1 > g2
  g2_over_g1_at_2t,       ///< k2 = 2t, t >= 2, (k1,k2) != (4,4): g2 > g1
  g2_over_g1_mid,         ///< t+2 <= k2 <= 2t-1: g2 > g1
  g2_over_g1_at_t_plus_1, ///< k2 = t+1, (k1,t) not in {(2,1),(3,1),(4,1)}: g2 > g1
  g1_swap,                ///< k1 > k2: g1(k1,k2) > g1(k2,k1)
  g2_swap,                ///< k1 > k2: g2(k1,k2) > g2(k2,k1)
  g1_over_g3,             ///< g1 > max{g3(k1,k2), g3(k2,k1)}
  g1_over_g4,             ///< g1 > max{g4(k1,k2), g4(k2,k1)}
  g1_over_g5,             ///< g1 > g5
  g1_g2_dichotomy,        ///< g1 > g2 iff k2 >= 2t+1, outside the exceptional tuples
};

inline constexpr std::array<Inequality, 11> kAllInequalities = {
    Inequality::g6_below_g1_below_cap, Inequality::g1_over_g2_wide,
    Inequality::g2_over_g1_at_2t,      Inequality::g2_over_g1_mid,
    Inequality::g2_over_g1_at_t_plus_1, Inequality::g1_swap,
    Inequality::g2_swap,               Inequality::g1_over_g3,
    Inequality::g1_over_g4,            Inequality::g1_over_g5,
    Inequality::g1_g2_dichotomy,
};

/// Identifier used on the command line ("4.1" ... "4.10", "dichotomy").
inline std::string_view inequality_id(Inequality which) {
  switch (which) {
    case Inequality::g6_below_g1_below_cap: return "4.1";
    case Inequality::g1_over_g2_wide: return "4.2";
    case Inequality::g2_over_g1_at_2t: return "4.3";
    case Inequality::g2_over_g1_mid: return "4.4";
    case Inequality::g2_over_g1_at_t_plus_1: return "4.5";
    case Inequality::g1_swap: return "4.6";
    case Inequality::g2_swap: return "4.7";
    case Inequality::g1_over_g3: return "4.8";
    case Inequality::g1_over_g4: return "4.9";
    case Inequality::g1_over_g5: return "4.10";
    case Inequality::g1_g2_dichotomy: return "dichotomy";
  }
  return "?";
}

/// Descriptive slug, e.g. "g1-over-g2-wide".
inline std::string_view inequality_name(Inequality which) {
  switch (which) {
    case Inequality::g6_below_g1_below_cap: return "g6-below-g1-below-cap";
    case Inequality::g1_over_g2_wide: return "g1-over-g2-wide";
    case Inequality::g2_over_g1_at_2t: return "g2-over-g1-at-2t";
    case Inequality::g2_over_g1_mid: return "g2-over-g1-mid";
    case Inequality::g2_over_g1_at_t_plus_1: return "g2-over-g1-at-t-plus-1";
    case Inequality::g1_swap: return "g1-swap";
    case Inequality::g2_swap: return "g2-swap";
    case Inequality::g1_over_g3: return "g1-over-g3";
    case Inequality::g1_over_g4: return "g1-over-g4";
    case Inequality::g1_over_g5: return "g1-over-g5";
    case Inequality::g1_g2_dichotomy: return "g1-g2-dichotomy";
  }
  return "?";
}

inline std::optional<Inequality> parse_inequality(std::string_view id) {
  for (Inequality q : kAllInequalities)
    if (inequality_id(q) == id || inequality_name(q) == id) return q;
  return std::nullopt;
}

struct InequalityVerdict {
  enum class Status { holds, fails, hypotheses_unmet };
  Status status = Status::hypotheses_unmet;
  bool n_meets_threshold = false;
  long threshold = 0;
};

inline std::string_view to_string(InequalityVerdict::Status s) {
  switch (s) {
    case InequalityVerdict::Status::holds: return "holds";
    case InequalityVerdict::Status::fails: return "fails";
    case InequalityVerdict::Status::hypotheses_unmet: return "hypotheses-unmet";
  }
  return "?";
}

/// Structural side conditions of each comparison (n excluded).
inline bool inequality_applies(Inequality which, long k1, long k2, long t) {
  if (t < 1 || k2 < t + 1 || k1 < k2) return false;
  switch (which) {
    case Inequality::g6_below_g1_below_cap:
    case Inequality::g1_over_g3:
    case Inequality::g1_over_g4:
    case Inequality::g1_over_g5:
      return true;
    case Inequality::g1_over_g2_wide: return k2 >= 2 * t + 1;
    case Inequality::g2_over_g1_at_2t: return k2 == 2 * t && t >= 2 && !(k1 == 4 && k2 == 4);
    case Inequality::g2_over_g1_mid: return k2 >= t + 2 && k2 <= 2 * t - 1;
    case Inequality::g2_over_g1_at_t_plus_1:
      return k2 == t + 1 && !(t == 1 && (k1 == 2 || k1 == 3 || k1 == 4));
    case Inequality::g1_swap:
    case Inequality::g2_swap:
      return k1 > k2;
    case Inequality::g1_g2_dichotomy: return !is_exceptional_cross_tuple(k1, k2, t);
  }
  return false;
}

inline bool inequality_claim(Inequality which, long k1, long k2, long n, long t) {
  switch (which) {
    case Inequality::g6_below_g1_below_cap: {
      const ExactInt g1v = g(1, k1, k2, n, t);
      const ExactInt cap =
          ExactInt(k2 - t + 1) * binomial(n - t - 1, k1 - t - 1) * (binomial(n - t, k2 - t) + t);
      return g(6, k1, k2, n, t) < g1v && g1v < cap;
    }
    case Inequality::g1_over_g2_wide: return g(1, k1, k2, n, t) > g(2, k1, k2, n, t);
    case Inequality::g2_over_g1_at_2t:
    case Inequality::g2_over_g1_mid:
    case Inequality::g2_over_g1_at_t_plus_1:
      return g(2, k1, k2, n, t) > g(1, k1, k2, n, t);
    case Inequality::g1_swap: return g(1, k1, k2, n, t) > g(1, k2, k1, n, t);
    case Inequality::g2_swap: return g(2, k1, k2, n, t) > g(2, k2, k1, n, t);
    case Inequality::g1_over_g3: {
      const ExactInt g1v = g(1, k1, k2, n, t);
      return g1v > g(3, k1, k2, n, t) && g1v > g(3, k2, k1, n, t);
    }
    case Inequality::g1_over_g4: {
      const ExactInt g1v = g(1, k1, k2, n, t);
      return g1v > g(4, k1, k2, n, t) && g1v > g(4, k2, k1, n, t);
    }
    case Inequality::g1_over_g5: return g(1, k1, k2, n, t) > g(5, k1, k2, n, t);
    case Inequality::g1_g2_dichotomy: {
      const ExactInt g1v = g(1, k1, k2, n, t);
      const ExactInt g2v = g(2, k1, k2, n, t);
      return k2 >= 2 * t + 1 ? g1v > g2v : g1v < g2v;
    }
  }
  return false;
}

inline InequalityVerdict check_inequality_lemma(Inequality which, long k1, long k2, long n, long t) {
  InequalityVerdict v;
  if (t >= 1) {
    v.threshold = cross_product_threshold(k1, k2, t);
    v.n_meets_threshold = n >= v.threshold;
  }
  if (!inequality_applies(which, k1, k2, t)) return v;
  v.status = inequality_claim(which, k1, k2, n, t) ? InequalityVerdict::Status::holds
                                                   : InequalityVerdict::Status::fails;
  return v;
}

// ---------------------------------------------------------------------------
// Monotonicity of the auxiliary counting functions

/// 2(k-t+1)(l-t+1)+t+1.
inline long gw_threshold(long k, long l, long t) { return 2 * (k - t + 1) * (l - t + 1) + t + 1; }

/// (t+1)^2 (k-t+1)(l-t+1)+t+1.
inline long f2_threshold(long k, long l, long t) {
  return (t + 1) * (t + 1) * (k - t + 1) * (l - t + 1) + t + 1;
}

/// 2(k-t-1)(l+1-t)+t+1.
inline long fprime_threshold(long k, long l, long t) {
  return 2 * (k - t - 1) * (l + 1 - t) + t + 1;
}

/// g_w strictly increasing over w in {max(0,s+t-k), ..., t-1}.
inline bool gw_increasing(long n, long k, long l, long s, long t) {
  detail::require(t >= 1 && t <= l && t <= s && s < k, "gw_increasing needs 1 <= t <= l, t <= s < k");
  for (long w = std::max(0L, s + t - k); w + 1 <= t - 1; ++w)
    if (!(g_w(w, n, k, l, s, t) < g_w(w + 1, n, k, l, s, t))) return false;
  return true;
}

/// f2 strictly decreasing over m in {t, ..., l}, and below
/// (t+1)(k-t+1) C(n-t-1,l-t-1) for t+2 <= m <= l.
inline bool f2_decreasing(long n, long k, long l, long t) {
  detail::require(t >= 1 && t <= l && k >= 1, "f2_decreasing needs 1 <= t <= l, k >= 1");
  for (long m = t; m + 1 <= l; ++m)
    if (!(f2(m + 1, k, l, n, t) < f2(m, k, l, n, t))) return false;
  const ExactRat cap(ExactInt(t + 1) * (k - t + 1) * binomial(n - t - 1, l - t - 1));
  for (long m = t + 2; m <= l; ++m)
    if (!(f2(m, k, l, n, t) < cap)) return false;
  return true;
}

/// f' nondecreasing over m in {t, ..., l}.
inline bool fprime_nondecreasing(long n, long k, long l, long t) {
  detail::require(t >= 1 && t <= l, "fprime_nondecreasing needs 1 <= t <= l");
  for (long m = t; m + 1 <= l; ++m)
    if (f_prime(n, k, l, m + 1, t) < f_prime(n, k, l, m, t)) return false;
  return true;
}

}  // namespace isect
