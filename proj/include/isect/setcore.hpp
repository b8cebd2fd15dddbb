#pragma once

// Subsets of [n] as 64-bit masks and uniform families of them.
//
// Element i of [n] (1-based, as printed) lives in bit i-1 of the mask.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isect/errors.hpp"

namespace isect {

inline constexpr int kMaxUniverse = 64;

inline constexpr std::uint64_t universe_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

class SetMask {
 public:
  constexpr SetMask() = default;
  constexpr SetMask(int n, std::uint64_t bits) : bits_(bits), n_(n) {}

  /// Checked construction; rejects bits outside [n].
  static SetMask of_bits(int n, std::uint64_t bits) {
    detail::require(n >= 0 && n <= kMaxUniverse, "universe size must lie in [0, 64]");
    detail::require((bits & ~universe_bits(n)) == 0, "mask has bits outside the universe");
    return SetMask(n, bits);
  }

  /// Builds a set from 1-based elements.
  static SetMask of(int n, std::span<const int> elements) {
    detail::require(n >= 0 && n <= kMaxUniverse, "universe size must lie in [0, 64]");
    std::uint64_t bits = 0;
    for (int e : elements) {
      detail::require(e >= 1 && e <= n, "element " + std::to_string(e) + " outside [1, " +
                                            std::to_string(n) + "]");
      bits |= std::uint64_t{1} << (e - 1);
    }
    return SetMask(n, bits);
  }
  static SetMask of(int n, std::initializer_list<int> elements) {
    return of(n, std::span<const int>(elements.begin(), elements.size()));
  }

  /// {1, ..., m} over [n].
  static SetMask prefix(int n, int m) {
    detail::require(m >= 0 && m <= n, "prefix length outside [0, n]");
    return SetMask(n, universe_bits(m));
  }
  static SetMask full(int n) { return of_bits(n, universe_bits(n)); }
  static SetMask empty(int n) { return of_bits(n, 0); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int universe() const { return n_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }

  constexpr bool has(int element) const {
    return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U) != 0;
  }
  constexpr bool contains(SetMask other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool subset_of(SetMask other) const { return other.contains(*this); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// "1,2,5"; the empty set prints as an empty string.
  std::string to_string() const {
    std::string out;
    for (int e : elements()) {
      if (!out.empty()) out += ',';
      out += std::to_string(e);
    }
    return out;
  }

  friend constexpr SetMask operator&(SetMask a, SetMask b) { return {a.n_, a.bits_ & b.bits_}; }
  friend constexpr SetMask operator|(SetMask a, SetMask b) { return {a.n_, a.bits_ | b.bits_}; }
  friend constexpr SetMask operator-(SetMask a, SetMask b) { return {a.n_, a.bits_ & ~b.bits_}; }

  friend constexpr bool operator==(SetMask, SetMask) = default;
  friend constexpr std::strong_ordering operator<=>(SetMask a, SetMask b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

/// Next mask with the same popcount (Gosper). Returns false when x was the
/// largest such mask inside [n].
inline bool next_same_popcount(std::uint64_t& x, int n) {
  if (x == 0) return false;
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return false;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return false;
  x = next;
  return true;
}

/// Spreads the low bits of `packed` onto the set positions of `ground`.
inline std::uint64_t deposit_bits(std::uint64_t packed, std::uint64_t ground) {
  std::uint64_t out = 0;
  for (std::uint64_t g = ground; g != 0 && packed != 0; g &= g - 1, packed >>= 1) {
    if (packed & 1U) out |= g & (~g + 1);
  }
  return out;
}

/// Calls fn(mask) for every k-subset of `ground`, in increasing mask order.
template <typename Fn>
void for_each_k_subset_of(std::uint64_t ground, int k, Fn&& fn) {
  const int m = std::popcount(ground);
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t packed = universe_bits(k);
  do {
    fn(deposit_bits(packed, ground));
  } while (next_same_popcount(packed, m));
}

/// Uniform family of k-subsets of [n], kept sorted and duplicate-free.
class Family {
 public:
  Family() = default;
  Family(int n, int k) : n_(n), k_(k) {
    detail::require(n >= 0 && n <= kMaxUniverse, "universe size must lie in [0, 64]");
    detail::require(k >= 0 && k <= n, "member size must lie in [0, n]");
  }

  /// Canonicalizes (sorts, removes duplicates) and validates the members.
  static Family from_members(int n, int k, std::vector<SetMask> members) {
    Family f(n, k);
    for (SetMask m : members) {
      detail::require(m.universe() == n, "member universe differs from family universe");
      detail::require((m.bits() & ~universe_bits(n)) == 0, "member has bits outside [n]");
      detail::require(m.size() == k, "member " + m.to_string() + " does not have size " +
                                         std::to_string(k));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    f.members_ = std::move(members);
    return f;
  }

  static Family from_bits(int n, int k, std::span<const std::uint64_t> bits) {
    std::vector<SetMask> members;
    members.reserve(bits.size());
    for (auto b : bits) members.emplace_back(n, b);
    return from_members(n, k, std::move(members));
  }

  int universe() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const SetMask> members() const { return members_; }
  SetMask operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(SetMask s) const {
    return s.universe() == n_ && std::binary_search(members_.begin(), members_.end(), s);
  }
  bool is_subfamily_of(const Family& other) const {
    return n_ == other.n_ && k_ == other.k_ &&
           std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<SetMask> members_;
};

/// All C(n,k) k-subsets of [n] in increasing mask order.
inline Family enumerate_k_subsets(int n, int k) {
  detail::require(n >= 0 && n <= kMaxUniverse, "universe size must lie in [0, 64]");
  detail::require(k >= 0 && k <= n, "member size must lie in [0, n]");
  std::vector<SetMask> out;
  for_each_k_subset_of(universe_bits(n), k, [&](std::uint64_t m) { out.emplace_back(n, m); });
  return Family::from_members(n, k, std::move(out));
}

/// Members of `base` accepted by `pred`.
template <typename Pred>
Family filter(const Family& base, Pred&& pred) {
  std::vector<SetMask> kept;
  for (SetMask m : base)
    if (pred(m)) kept.push_back(m);
  return Family::from_members(base.universe(), base.k(), std::move(kept));
}

/// k-subsets of [n] accepted by `pred`.
template <typename Pred>
Family k_subsets_where(int n, int k, Pred&& pred) {
  return filter(enumerate_k_subsets(n, k), std::forward<Pred>(pred));
}

inline Family restrict(const Family& f, SetMask s) {
  detail::require(s.universe() == f.universe(), "restricting set lives in a different universe");
  return filter(f, [s](SetMask m) { return m.contains(s); });
}

/// Intersection of all members; the empty family yields the full universe.
inline SetMask family_intersection(const Family& f) {
  std::uint64_t acc = universe_bits(f.universe());
  for (SetMask m : f) acc &= m.bits();
  return SetMask(f.universe(), acc);
}

inline SetMask family_union(const Family& f) {
  std::uint64_t acc = 0;
  for (SetMask m : f) acc |= m.bits();
  return SetMask(f.universe(), acc);
}

inline Family family_union(const Family& a, const Family& b) {
  detail::require(a.universe() == b.universe() && a.k() == b.k(),
                  "union of families with different universe or member size");
  std::vector<SetMask> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Family::from_members(a.universe(), a.k(), std::move(out));
}

inline Family family_difference(const Family& a, const Family& b) {
  detail::require(a.universe() == b.universe() && a.k() == b.k(),
                  "difference of families with different universe or member size");
  std::vector<SetMask> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Family::from_members(a.universe(), a.k(), std::move(out));
}

inline Family family_meet(const Family& a, const Family& b) {
  detail::require(a.universe() == b.universe() && a.k() == b.k(),
                  "intersection of families with different universe or member size");
  std::vector<SetMask> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Family::from_members(a.universe(), a.k(), std::move(out));
}

}  // namespace isect
