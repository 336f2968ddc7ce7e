#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace semicov {

/// Fixed-width vector of bits used as the dense element table of a numerical
/// semigroup: bit i marks whether i belongs to the set.  Comparisons treat
/// lower indices as more significant and "present" as smaller, so of two
/// equal-width tables the one containing the smallest differing value comes
/// first.  Bits past size() in the last word are kept zero.
class BitVec {
public:
  using word_t = std::uint64_t;
  static constexpr int word_bits = 64;

  BitVec() = default;

  explicit BitVec(int size)
      : size_(size), words_(static_cast<std::size_t>(size + 63) / 64, 0) {}

  int size() const noexcept { return size_; }

  bool test(int i) const noexcept {
    assert(i >= 0 && i < size_);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) noexcept {
    assert(i >= 0 && i < size_);
    words_[static_cast<std::size_t>(i) >> 6] |= word_t{1} << (i & 63);
  }

  void reset(int i) noexcept {
    assert(i >= 0 && i < size_);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(word_t{1} << (i & 63));
  }

  int count() const noexcept {
    int total = 0;
    for (word_t w : words_) total += std::popcount(w);
    return total;
  }

  /// Smallest set index >= from, or -1 if there is none.
  int find_set(int from) const noexcept {
    if (from < 0) from = 0;
    if (from >= size_) return -1;
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    word_t w = words_[k] & (~word_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<int>((k << 6) + std::countr_zero(w));
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  /// Largest clear index, or -1 if every index is set.
  int find_last_clear() const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;) {
      word_t w = ~words_[k];
      if (k + 1 == words_.size()) w &= tail_mask();
      if (w != 0) return static_cast<int>((k << 6) + 63 - std::countl_zero(w));
    }
    return -1;
  }

  const std::vector<word_t>& words() const noexcept { return words_; }

  /// Mask of the in-range bit positions of the last word.
  word_t tail_mask() const noexcept {
    int r = size_ & 63;
    return r == 0 ? ~word_t{0} : (word_t{1} << r) - 1;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  /// Presence-first lexicographic order on equal-width vectors.
  friend bool lex_less(const BitVec& a, const BitVec& b) {
    assert(a.size_ == b.size_);
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      word_t diff = a.words_[k] ^ b.words_[k];
      if (diff != 0) return (a.words_[k] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  /// True when every set index of a is also set in b (equal widths).
  friend bool is_subset(const BitVec& a, const BitVec& b) {
    assert(a.size_ == b.size_);
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (a.words_[k] & ~b.words_[k]) return false;
    return true;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (word_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h ^ static_cast<std::size_t>(size_);
  }

private:
  int size_ = 0;
  std::vector<word_t> words_;
};

}  // namespace semicov
