#pragma once

// Closed-form counts and bounds for intersecting families, evaluated with
// exact integers and rationals.

#include <algorithm>
#include <string>
#include <variant>

#include "isect/errors.hpp"
#include "isect/exact.hpp"

namespace isect {

/// Size of the Hilton-Milner type family with a d-set kernel, parameterized
/// by the size c of the ambient set C (c in {k+1, ..., 2k-d} or c = n):
///   C(n-d,k-d) - C(n-k,k-d) + C(n-c,2k-c-d) + d(c-k).
inline ExactInt h1(long d, long k, long c, long n) {
  detail::require(d >= 1 && k > d, "h1 needs 1 <= d < k");
  detail::require(n >= 2 * k, "h1 needs n >= 2k");
  detail::require((c >= k + 1 && c <= 2 * k - d) || c == n,
                  "h1: c must lie in {k+1, ..., 2k-d} or equal n");
  return binomial(n - d, k - d) - binomial(n - k, k - d) + binomial(n - c, 2 * k - c - d) +
         ExactInt(d) * (c - k);
}

/// Size of {A : |A cap Z| >= z-1} for |Z| = z:
///   z C(n-z+1, k-z+1) - (z-1) C(n-z, k-z).
inline ExactInt h2(long z, long k, long n) {
  detail::require(z >= 3, "h2 needs z >= 3");
  detail::require(k >= z - 1, "h2 needs k >= z-1");
  return ExactInt(z) * binomial(n - z + 1, k - z + 1) - ExactInt(z - 1) * binomial(n - z, k - z);
}

/// Product bounds for cross t-intersecting pairs of k- and l-sets.
inline ExactInt g(int i, long k, long l, long n, long t) {
  switch (i) {
    case 1:
      return (binomial(n - t, k - t) - binomial(n - l - 1, k - t)) * (binomial(n - t, l - t) + t);
    case 2:
      return binomial(n - t - 1, k - t - 1) *
             (ExactInt(t + 1) * binomial(n - t - 1, l - t) + binomial(n - t - 1, l - t - 1));
    case 3:
      return (ExactInt(l - t) * binomial(n - t - 1, k - t - 1) + binomial(n - t - 2, k - t - 2)) *
             (binomial(n - t, l - t) + ExactInt(t) * (k - t) * binomial(n - t - 2, l - t - 1));
    case 4:
      return ExactInt(k - t + 1) * (k - t + 1) * binomial(t + 2, 2) * binomial(n - t, k - t) *
             binomial(n - t - 2, l - t - 2);
    case 5:
      return ExactInt(t + 1) * (t + 1) * (k - t + 1) * (l - t + 1) *
             binomial(n - t - 1, k - t - 1) * binomial(n - t - 1, l - t - 1);
    case 6:
      return (ExactInt(l - t + 1) * binomial(n - t - 1, k - t - 1) -
              binomial(l - t + 1, 2) * binomial(n - t - 2, k - t - 2)) *
             binomial(n - t, l - t);
    default:
      throw parameter_error("g index must lie in 1..6, got " + std::to_string(i));
  }
}

/// g_i normalized by C(n-t-1,k-t-1) C(n-t-1,l-t-1).
inline ExactRat g_tilde(int i, long k, long l, long n, long t) {
  const ExactInt value = g(i, k, l, n, t);
  const ExactInt divisor = binomial(n - t - 1, k - t - 1) * binomial(n - t - 1, l - t - 1);
  detail::require(divisor != 0, "g_tilde: normalizing binomial vanishes");
  return ExactRat(value, divisor);
}

/// (m-t) C(n-t-1,k-t-1) + (l+1-m)^2 C(n-t-2,k-t-2).
inline ExactInt f_prime(long n, long k, long l, long m, long t) {
  return ExactInt(m - t) * binomial(n - t - 1, k - t - 1) +
         ExactInt(l + 1 - m) * (l + 1 - m) * binomial(n - t - 2, k - t - 2);
}

/// k^(m-t-2) (k-t+1)^2 C(m,t) C(n-m,l-m). Rational because the power is
/// negative for m < t+2.
inline ExactRat f2(long m, long k, long l, long n, long t) {
  detail::require(k >= 1, "f2 needs k >= 1");
  return rpow(k, m - t - 2) * ExactRat(ExactInt(k - t + 1) * (k - t + 1) * binomial(m, t) *
                                       binomial(n - m, l - m));
}

/// C(l-w,t-w) C(n-s-t+w,k-s-t+w).
inline ExactInt g_w(long w, long n, long k, long l, long s, long t) {
  return binomial(l - w, t - w) * binomial(n - s - t + w, k - s - t + w);
}

/// Upper bound on |F| for a maximal cross t-intersecting pair (F of k-sets,
/// G of l-sets) with covering numbers m_f and m_g.
inline ExactInt bound_family_size(long m_f, long m_g, long n, long k, long l, long t) {
  detail::require(t >= 1, "bound_family_size needs t >= 1");
  detail::require(m_f >= t && m_g >= t, "covering numbers are at least t");
  if (m_g == t) return binomial(m_f, t) * binomial(n - t, k - t);
  if (m_g == t + 1) return ExactInt(l - t + 1) * binomial(m_f, t) * binomial(n - t - 1, k - t - 1);
  return ipow(l, m_g - t - 2) * (l - t + 1) * (l - t + 1) * binomial(m_f, t) *
         binomial(n - m_g, k - m_g);
}

// ---------------------------------------------------------------------------
// Parameter tuples and theorem hypotheses

struct RwiseParams {
  long n = 0, k = 0, t = 0, r = 0;
};
struct CrossParams {
  long n = 0, k1 = 0, k2 = 0, t = 0;
};
struct FamilyIParams {
  long n = 0, k = 0, t = 0, c = 0;
};
using ParamSet = std::variant<RwiseParams, CrossParams, FamilyIParams>;

enum class Theorem {
  rwise_maximum,    ///< size bound for non-trivial r-wise t-intersecting families
  rwise_stability,  ///< containment in the extremal families above h1(...,n)
  cross_product,    ///< maximum product of non-trivial cross t-intersecting pairs
};

/// Requires r >= 3 and (t+r-1)(k-t-r+3) < n.
inline bool rwise_maximum_hypotheses(const RwiseParams& p) {
  return p.r >= 3 && p.t >= 1 && p.k >= 1 && (p.t + p.r - 1) * (p.k - p.t - p.r + 3) < p.n;
}

/// Requires r >= 3, t+r <= k and
/// max{C(t+r,2), (k-t-r+4)/2} (k-t-r+3)^2 + t+r-2 <= n.
inline bool rwise_stability_hypotheses(const RwiseParams& p) {
  if (p.r < 3 || p.t < 1 || p.t + p.r > p.k) return false;
  const long s = p.t + p.r;
  const long gap = p.k - s + 3;
  // Doubled to keep (k-t-r+4)/2 integral.
  const long twice_max = std::max(s * (s - 1), p.k - s + 4);
  return twice_max * gap * gap + 2 * (s - 2) <= 2 * p.n;
}

inline bool is_exceptional_cross_tuple(long k1, long k2, long t) {
  return (k1 == 2 && k2 == 2 && t == 1) || (k1 == 3 && k2 == 2 && t == 1) ||
         (k1 == 4 && k2 == 2 && t == 1) || (k1 == 4 && k2 == 4 && t == 2);
}

/// max{t+1, k2-t} (t+1)(k1-t+1)(k2-t+1) + t+1.
inline long cross_product_threshold(long k1, long k2, long t) {
  return std::max(t + 1, k2 - t) * (t + 1) * (k1 - t + 1) * (k2 - t + 1) + t + 1;
}

inline bool cross_product_hypotheses(const CrossParams& p) {
  return p.t >= 1 && p.k1 >= p.k2 && p.k2 >= p.t + 1 &&
         p.n >= cross_product_threshold(p.k1, p.k2, p.t) &&
         !is_exceptional_cross_tuple(p.k1, p.k2, p.t);
}

inline bool hypotheses(Theorem which, const ParamSet& params) {
  switch (which) {
    case Theorem::rwise_maximum:
      if (auto* p = std::get_if<RwiseParams>(&params)) return rwise_maximum_hypotheses(*p);
      break;
    case Theorem::rwise_stability:
      if (auto* p = std::get_if<RwiseParams>(&params)) return rwise_stability_hypotheses(*p);
      break;
    case Theorem::cross_product:
      if (auto* p = std::get_if<CrossParams>(&params)) return cross_product_hypotheses(*p);
      break;
  }
  throw parameter_error("parameter tuple does not match the theorem's variant");
}

}  // namespace isect
