#pragma once

// Classification of maximal cross t-intersecting pairs by their covering
// numbers, with the product bound that governs each class.

#include <array>
#include <string>
#include <vector>

#include "isect/formulas.hpp"
#include "isect/search/report.hpp"
#include "isect/verify.hpp"

namespace isect {

struct CensusRow {
  int case_id = 0;        ///< 1..5
  std::string subcase;    ///< "ii", "iii", "iv" for cases 2 and 3, else empty
  int tau_left = 0;
  int tau_right = 0;
  std::size_t size_left = 0;
  std::size_t size_right = 0;
  ExactInt product = 0;
  std::string bound_name;  ///< formula compared against, e.g. "g3(k2,k1)"
  ExactInt bound_value = 0;
};

struct CensusTable {
  std::vector<CensusRow> rows;
  std::array<std::size_t, 6> case_counts{};  ///< index 1..5
};

namespace detail {

/// Subcase of a pair whose small side `narrow` has a t-cover of size t and
/// whose other side `wide` has covering number t+1. `k_wide` is the member
/// size of `wide`.
inline std::string t_vs_t_plus_1_subcase(const Family& narrow, const Family& wide, int k_wide,
                                         int t) {
  for (SetMask x : min_covers(narrow, t)) {
    bool have = false;
    bool same = true;
    SetMask m;
    for (SetMask g : wide) {
      if (g.contains(x)) continue;
      const SetMask u = g | x;
      if (!have) {
        m = u;
        have = true;
      } else if (u != m) {
        same = false;
        break;
      }
    }
    if (have && same && m.size() == k_wide + 1) return "ii";
  }
  for (SetMask cover : min_covers(wide, t)) {
    bool inside_all = true;
    for (SetMask f : narrow) inside_all = inside_all && f.contains(cover);
    if (inside_all) return "iii";
  }
  return "iv";
}

}  // namespace detail

inline CensusRow classify_pair(const ConceptPair& p, int n, int t) {
  CensusRow row;
  const int k1 = p.left.k();
  const int k2 = p.right.k();
  row.tau_left = covering_number(p.left, t).size;
  row.tau_right = covering_number(p.right, t).size;
  row.size_left = p.left.size();
  row.size_right = p.right.size();
  row.product = p.product();
  const int a = row.tau_left;
  const int b = row.tau_right;
  auto set_bound = [&](std::string name, ExactInt value) {
    row.bound_name = std::move(name);
    row.bound_value = std::move(value);
  };
  if (a == t && b == t) {
    row.case_id = 1;
  } else if (a == t && b == t + 1) {
    row.case_id = 2;
    row.subcase = detail::t_vs_t_plus_1_subcase(p.left, p.right, k2, t);
    if (row.subcase == "ii") set_bound("g1(k1,k2)", g(1, k1, k2, n, t));
    else if (row.subcase == "iii") set_bound("g2(k1,k2)", g(2, k1, k2, n, t));
    else set_bound("g3(k1,k2)", g(3, k1, k2, n, t));
  } else if (a == t + 1 && b == t) {
    row.case_id = 3;
    row.subcase = detail::t_vs_t_plus_1_subcase(p.right, p.left, k1, t);
    if (row.subcase == "ii") set_bound("g1(k2,k1)", g(1, k2, k1, n, t));
    else if (row.subcase == "iii") set_bound("g2(k2,k1)", g(2, k2, k1, n, t));
    else set_bound("g3(k2,k1)", g(3, k2, k1, n, t));
  } else if (a == t || b == t) {
    row.case_id = 4;
    if (a == t) set_bound("g4(k2,k1)", g(4, k2, k1, n, t));
    else set_bound("g4(k1,k2)", g(4, k1, k2, n, t));
  } else {
    row.case_id = 5;
    set_bound("g5(k1,k2)", g(5, k1, k2, n, t));
  }
  return row;
}

/// Classifies every closed pair recorded in a cross report.
inline CensusTable covering_number_census(const SearchReport& report) {
  detail::require(report.kind == "cross", "census needs a cross report");
  const auto& p = std::get<CrossParams>(report.params);
  CensusTable table;
  for (const auto& pair : report.closed_pairs) {
    table.rows.push_back(classify_pair(pair, static_cast<int>(p.n), static_cast<int>(p.t)));
    ++table.case_counts[static_cast<std::size_t>(table.rows.back().case_id)];
  }
  return table;
}

/// The minimum t-covers of the two sides form a cross t-intersecting pair.
inline bool min_covers_cross_intersect(const ConceptPair& p, int t) {
  return is_cross_t_intersecting({min_covers(p.left, t), min_covers(p.right, t), t});
}

/// Both sides respect the size bound at their measured covering numbers.
inline bool within_cover_bound(const ConceptPair& p, int n, int t) {
  const long k1 = p.left.k();
  const long k2 = p.right.k();
  const long a = covering_number(p.left, t).size;
  const long b = covering_number(p.right, t).size;
  return ExactInt(p.left.size()) <= bound_family_size(a, b, n, k1, k2, t) &&
         ExactInt(p.right.size()) <= bound_family_size(b, a, n, k2, k1, t);
}

}  // namespace isect
