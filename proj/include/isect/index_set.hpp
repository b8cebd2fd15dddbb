#pragma once

// Fixed-capacity bitset over vertex indices [0, 256), used for candidate
// sets in the searches. C(10,5) = 252 is the largest level that fits.

#include <array>
#include <bit>
#include <cstdint>

namespace isect {

class IndexSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = 64 * kWords;

  static IndexSet first_n(int count) {
    IndexSet s;
    for (int w = 0; w < kWords && count > 0; ++w, count -= 64)
      s.words_[w] = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
    return s;
  }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
  std::uint64_t word(int w) const { return words_[w]; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return 64 * w + std::countr_zero(words_[w]);
    return -1;
  }

  /// Keeps only indices strictly greater than i.
  void drop_through(int i) {
    const int w = i >> 6;
    for (int j = 0; j < w; ++j) words_[j] = 0;
    const int b = i & 63;
    words_[w] &= b == 63 ? 0 : ~((std::uint64_t{2} << b) - 1);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w)
      for (std::uint64_t x = words_[w]; x != 0; x &= x - 1) fn(64 * w + std::countr_zero(x));
  }

  IndexSet& operator&=(const IndexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  bool subset_of(const IndexSet& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace isect
