#pragma once

// Slow reference implementations. None of these call into the search or
// verify code; they only share SetMask/Family as containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "isect/setcore.hpp"

namespace oracle {

using Bits = std::vector<std::uint64_t>;

inline Bits k_subsets(int n, int k) {
  Bits out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

inline std::uint64_t full(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// Every choice of r members with repetition, by brute recursion.
inline bool rwise(const Bits& f, int r, int t, int n) {
  std::function<bool(int, int, std::uint64_t)> rec = [&](int start, int left, std::uint64_t acc) {
    if (left == 0) return std::popcount(acc) >= t;
    for (int i = start; i < static_cast<int>(f.size()); ++i)
      if (!rec(i, left - 1, acc & f[i])) return false;
    return true;
  };
  if (f.empty()) return true;
  return rec(0, r, full(n));
}

inline bool nontrivial(const Bits& f, int t, int n) {
  std::uint64_t all = full(n);
  for (auto m : f) all &= m;
  return std::popcount(all) < t;
}

struct MaxResult {
  std::size_t optimum = 0;
  std::vector<Bits> witnesses;  ///< sorted members, sorted list
};

/// Depth-first over all subfamilies of C([n],k) in index order. r-wise
/// t-intersection is hereditary, so a subfamily is reached iff it is valid.
/// The only cut is the plain count bound (chosen + remaining < best).
/// Each maximum witness is re-checked with rwise().
inline MaxResult max_rwise(int n, int k, int t, int r, bool require_nontrivial) {
  const Bits pool = k_subsets(n, k);
  MaxResult best;
  Bits chosen;
  // inter[j] holds the intersections of j distinct chosen members (j <= r-1).
  std::vector<Bits> inter(r);
  inter[0] = {full(n)};
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (!chosen.empty() && (!require_nontrivial || nontrivial(chosen, t, n))) {
      if (chosen.size() > best.optimum) {
        best.optimum = chosen.size();
        best.witnesses.clear();
      }
      if (chosen.size() == best.optimum) best.witnesses.push_back(chosen);
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (chosen.size() + (pool.size() - i) < best.optimum) return;
      const std::uint64_t x = pool[i];
      bool ok = true;
      for (int j = 0; j < r && ok; ++j)
        for (auto m : inter[j])
          if (std::popcount(m & x) < t) {
            ok = false;
            break;
          }
      if (!ok) continue;
      std::vector<std::size_t> old(r);
      for (int j = 0; j < r; ++j) old[j] = inter[j].size();
      for (int j = r - 1; j >= 1; --j)
        for (std::size_t q = 0; q < old[j - 1]; ++q) inter[j].push_back(inter[j - 1][q] & x);
      chosen.push_back(x);
      dfs(i + 1);
      chosen.pop_back();
      for (int j = 0; j < r; ++j) inter[j].resize(old[j]);
    }
  };
  dfs(0);
  for (const auto& w : best.witnesses)
    if (!rwise(w, r, t, n)) throw std::logic_error("oracle: invalid witness");
  std::sort(best.witnesses.begin(), best.witnesses.end());
  return best;
}

/// Smallest T subset of [n] with |T cap F| >= t for all F, by scanning all 2^n sets.
inline int covering_number(const Bits& f, int t, int n) {
  int best = n + 1;
  for (std::uint64_t s = 0; s <= full(n); ++s) {
    const int sz = std::popcount(s);
    if (sz >= best) continue;
    bool ok = true;
    for (auto m : f)
      if (std::popcount(m & s) < t) {
        ok = false;
        break;
      }
    if (ok) best = sz;
  }
  return best;
}

inline Bits min_covers(const Bits& f, int t, int n) {
  const int tau = covering_number(f, t, n);
  Bits out;
  for (std::uint64_t s = 0; s <= full(n); ++s) {
    if (std::popcount(s) != tau) continue;
    bool ok = true;
    for (auto m : f) ok = ok && std::popcount(m & s) >= t;
    if (ok) out.push_back(s);
  }
  return out;
}

/// Bipartite relation on index sets: rows[i] = right partners of left i.
struct Relation {
  Bits left, right;
  Bits rows, cols;  ///< only valid while both sides have <= 64 members

  Relation(int n, int k1, int k2, int t) : left(k_subsets(n, k1)), right(k_subsets(n, k2)) {
    if (left.size() > 64 || right.size() > 64) return;
    rows.assign(left.size(), 0);
    cols.assign(right.size(), 0);
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        if (std::popcount(left[i] & right[j]) >= t) {
          rows[i] |= std::uint64_t{1} << j;
          cols[j] |= std::uint64_t{1} << i;
        }
  }
  std::uint64_t up(std::uint64_t a) const {
    std::uint64_t out = full(static_cast<int>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
      if (a >> i & 1) out &= rows[i];
    return out;
  }
  std::uint64_t down(std::uint64_t b) const {
    std::uint64_t out = full(static_cast<int>(left.size()));
    for (std::size_t j = 0; j < right.size(); ++j)
      if (b >> j & 1) out &= cols[j];
    return out;
  }
};

using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// Maximal pairs by testing every subset of the smaller side.
inline Pairs maximal_pairs_by_subsets(const Relation& rel) {
  Pairs out;
  const bool left_small = rel.left.size() <= rel.right.size();
  const std::size_t m = left_small ? rel.left.size() : rel.right.size();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
    if (left_small) {
      const std::uint64_t b = rel.up(a);
      if (rel.down(b) == a) out.emplace_back(a, b);
    } else {
      const std::uint64_t e = rel.down(a);
      if (rel.up(e) == a) out.emplace_back(e, a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline void radix_sort(Bits& v, int key_bits) {
  Bits buf(v.size());
  for (int shift = 0; shift < key_bits; shift += 12) {
    std::vector<std::size_t> count(4097, 0);
    for (auto x : v) ++count[((x >> shift) & 4095) + 1];
    for (int i = 0; i < 4096; ++i) count[i + 1] += count[i];
    for (auto x : v) buf[count[(x >> shift) & 4095]++] = x;
    v.swap(buf);
  }
}

}  // namespace detail

/// All closed left extents as the intersection closure of the columns plus
/// the full left set. Sorted, no duplicates.
inline Bits closed_extents_by_intersection(const Relation& rel) {
  const int bits = static_cast<int>(rel.left.size());
  Bits s{full(bits)};
  for (auto c : rel.cols) {
    Bits add(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) add[i] = s[i] & c;
    detail::radix_sort(add, bits);
    add.erase(std::unique(add.begin(), add.end()), add.end());
    Bits merged;
    merged.reserve(s.size() + add.size());
    std::set_union(s.begin(), s.end(), add.begin(), add.end(), std::back_inserter(merged));
    s.swap(merged);
  }
  return s;
}

/// (left star, right star) at every t-set X, as index masks.
inline Pairs star_pairs(const Relation& rel, int n, int t) {
  Pairs out;
  for (auto x : k_subsets(n, t)) {
    std::uint64_t a = 0, b = 0;
    for (std::size_t i = 0; i < rel.left.size(); ++i)
      if ((rel.left[i] & x) == x) a |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < rel.right.size(); ++j)
      if ((rel.right[j] & x) == x) b |= std::uint64_t{1} << j;
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace oracle
