#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace addbase {

/// Fixed-length dense bitset; the storage behind every GroupSubset.
/// Bits past size() are kept zero so word-level comparisons and hashes are exact.
class DenseBitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  DenseBitset() = default;
  explicit DenseBitset(std::size_t n) : size_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void set_all() noexcept {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool all() const noexcept { return count() == size_; }

  DenseBitset& operator|=(const DenseBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DenseBitset& operator&=(const DenseBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this \ o
  DenseBitset& subtract(const DenseBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool is_subset_of(const DenseBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// OR into this the bits of `src` rotated left by `shift` (cyclic over size()).
  void or_rotated(const DenseBitset& src, std::size_t shift) {
    const std::size_t n = size_;
    shift %= n;
    // [0, n-shift) -> [shift, n) and [n-shift, n) -> [0, shift)
    or_range(src, 0, shift, n - shift);
    or_range(src, n - shift, 0, shift);
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int tz = std::countr_zero(bits);
        fn(w * kWordBits + static_cast<std::size_t>(tz));
        bits &= bits - 1;
      }
    }
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ size_;
    for (Word w : words_) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const DenseBitset& a, const DenseBitset& b) = default;

 private:
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  Word extract(const DenseBitset& src, std::size_t pos) const noexcept {
    // 64 bits of src starting at bit pos (zero-padded past the end)
    const std::size_t w = pos / kWordBits;
    const std::size_t off = pos % kWordBits;
    Word lo = w < src.words_.size() ? src.words_[w] : 0;
    if (off == 0) return lo;
    Word hi = w + 1 < src.words_.size() ? src.words_[w + 1] : 0;
    return (lo >> off) | (hi << (kWordBits - off));
  }

  void or_range(const DenseBitset& src, std::size_t from, std::size_t to, std::size_t len) noexcept {
    std::size_t done = 0;
    while (done < len) {
      const std::size_t dst = to + done;
      const std::size_t off = dst % kWordBits;
      const std::size_t take = std::min(kWordBits - off, len - done);
      Word chunk = extract(src, from + done);
      if (take < kWordBits) chunk &= (Word{1} << take) - 1;
      words_[dst / kWordBits] |= chunk << off;
      done += take;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace addbase
