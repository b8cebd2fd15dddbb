#pragma once

// Decision procedures for intersection properties of families and pairs.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isect/setcore.hpp"

namespace isect {

/// Tags attached to results that relied on an empty-family convention.
namespace convention {
inline constexpr std::string_view empty_family_trivial = "empty-family-is-trivial";
inline constexpr std::string_view empty_family_cover_zero = "empty-family-covering-number-0";
inline constexpr std::string_view empty_family_intersecting = "empty-family-rwise-iff-k-ge-t";
}  // namespace convention

struct CoverCertificate {
  SetMask cover;
  int size = 0;
  std::string_view kind = "t-cover";
  bool by_convention = false;  ///< empty input; size 0 by convention
};

/// Two families over one universe and the cross threshold t.
struct PairParams {
  Family left;
  Family right;
  int t = 1;

  void validate() const {
    detail::require(left.universe() == right.universe(), "pair families live in different universes");
    detail::require(t >= 0, "t must be non-negative");
  }
};

/// Distinct intersections of at most `depth` members of f (members may
/// repeat). Returns an empty vector for depth 0 or an empty family.
/// Aborts early and sets `below` when some intersection has fewer than t
/// elements.
inline std::vector<std::uint64_t> bounded_intersections(const Family& f, int depth, int t,
                                                        bool* below = nullptr) {
  std::vector<std::uint64_t> level;
  if (below) *below = false;
  if (depth <= 0 || f.empty()) return level;
  for (SetMask m : f) level.push_back(m.bits());
  for (int j = 1;; ++j) {
    for (auto s : level) {
      if (std::popcount(s) < t) {
        if (below) *below = true;
        return level;
      }
    }
    if (j == depth) return level;
    std::vector<std::uint64_t> next = level;
    for (auto s : level)
      for (SetMask m : f) next.push_back(s & m.bits());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() == level.size()) return next;
    level = std::move(next);
  }
}

/// Every r members (with repetition) share at least t elements. For an
/// empty family the answer is k >= t, as for a single member.
inline bool is_r_wise_t_intersecting(const Family& f, int r, int t) {
  detail::require(r >= 1, "r must be at least 1");
  if (f.empty()) return f.k() >= t;
  bool below = false;
  bounded_intersections(f, r, t, &below);
  return !below;
}

/// Fewer than t elements common to all members. The empty family is trivial.
inline bool is_nontrivial(const Family& f, int t) { return family_intersection(f).size() < t; }

inline bool is_nontrivial_pair(const PairParams& p) {
  p.validate();
  return (family_intersection(p.left) & family_intersection(p.right)).size() < p.t;
}

inline bool is_cross_t_intersecting(const PairParams& p) {
  p.validate();
  for (SetMask a : p.left)
    for (SetMask b : p.right)
      if ((a & b).size() < p.t) return false;
  return true;
}

inline bool is_t_cover(const Family& f, SetMask cover, int t) {
  return std::all_of(f.begin(), f.end(), [&](SetMask m) { return (m & cover).size() >= t; });
}

/// All k_out-subsets of [n] meeting every member of f in at least t points.
inline Family dual(const Family& f, int k_out, int t) {
  detail::require(k_out >= 0 && k_out <= f.universe(), "dual: k_out must lie in [0, n]");
  return k_subsets_where(f.universe(), k_out, [&](SetMask a) { return is_t_cover(f, a, t); });
}

/// No k-set outside f can be added while keeping f r-wise t-intersecting.
inline bool is_maximal_rwise(const Family& f, int r, int t) {
  detail::require(r >= 2, "r must be at least 2");
  if (!is_r_wise_t_intersecting(f, r, t))
    throw contract_error("is_maximal_rwise: input is not r-wise t-intersecting");
  const auto partial = bounded_intersections(f, r - 1, t);
  bool extendable = false;
  for_each_k_subset_of(universe_bits(f.universe()), f.k(), [&](std::uint64_t a) {
    if (extendable || std::popcount(a) < t || f.contains(SetMask(f.universe(), a))) return;
    for (auto s : partial)
      if (std::popcount(s & a) < t) return;
    extendable = true;
  });
  return !extendable;
}

/// Minimum t-cover, searched among subsets of the union of f.
inline CoverCertificate covering_number(const Family& f, int t) {
  const int n = f.universe();
  if (f.empty()) return {SetMask::empty(n), 0, "t-cover", true};
  detail::require(f.k() >= t, "covering_number: members smaller than t admit no t-cover");
  const std::uint64_t ground = family_union(f).bits();
  const int width = std::popcount(ground);
  for (int s = std::max(t, 0); s <= width; ++s) {
    std::uint64_t found = 0;
    bool hit = false;
    for_each_k_subset_of(ground, s, [&](std::uint64_t c) {
      if (!hit && is_t_cover(f, SetMask(n, c), t)) {
        hit = true;
        found = c;
      }
    });
    if (hit) return {SetMask(n, found), s, "t-cover", false};
  }
  throw contract_error("covering_number: union failed to cover the family");
}

/// All t-covers of minimum size, as a family of tau-sets.
inline Family min_covers(const Family& f, int t) {
  const CoverCertificate best = covering_number(f, t);
  const int n = f.universe();
  std::vector<SetMask> out;
  for_each_k_subset_of(family_union(f).bits(), best.size, [&](std::uint64_t c) {
    if (is_t_cover(f, SetMask(n, c), t)) out.emplace_back(n, c);
  });
  return Family::from_members(n, best.size, std::move(out));
}

/// Maximal cross t-intersecting pair: each side is the dual of the other.
inline bool is_maximal_pair(const PairParams& p) {
  p.validate();
  return dual(p.left, p.right.k(), p.t) == p.right && dual(p.right, p.left.k(), p.t) == p.left;
}

}  // namespace isect
