#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace nmonoid {

using Int = std::int64_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for_bits(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

/// A finite set of non-negative factorization lengths, packed as a bit vector
/// indexed by length. Trailing zero words are always trimmed so that equal
/// sets have identical storage.
class LengthSet {
 public:
  LengthSet() = default;

  LengthSet(std::initializer_list<Int> lengths) {
    for (Int l : lengths) insert(l);
  }

  static LengthSet from_lengths(std::span<const Int> lengths) {
    LengthSet s;
    for (Int l : lengths) s.insert(l);
    return s;
  }

  static LengthSet from_bits(std::span<const Word> bits) {
    LengthSet s;
    s.words_.assign(bits.begin(), bits.end());
    s.trim();
    return s;
  }

  void insert(Int length) {
    const auto idx = static_cast<std::size_t>(length);
    const std::size_t w = idx / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= Word{1} << (idx % kWordBits);
  }

  void erase(Int length) {
    const auto idx = static_cast<std::size_t>(length);
    const std::size_t w = idx / kWordBits;
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (idx % kWordBits));
    trim();
  }

  bool contains(Int length) const noexcept {
    if (length < 0) return false;
    const auto idx = static_cast<std::size_t>(length);
    const std::size_t w = idx / kWordBits;
    return w < words_.size() && ((words_[w] >> (idx % kWordBits)) & 1U) != 0;
  }

  bool empty() const noexcept { return words_.empty(); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  // min()/max() require a non-empty set.
  Int min() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return static_cast<Int>(i * kWordBits + std::countr_zero(words_[i]));
    }
    return -1;
  }

  Int max() const noexcept {
    if (words_.empty()) return -1;
    const std::size_t i = words_.size() - 1;
    return static_cast<Int>(i * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i])));
  }

  std::vector<Int> lengths() const {
    std::vector<Int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<Int>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LengthSet& s) {
    os << '{';
    bool first = true;
    for (Int l : s.lengths()) {
      os << (first ? "" : ", ") << l;
      first = false;
    }
    return os << '}';
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<Word> words_;
};

struct LengthSetHash {
  std::size_t operator()(const LengthSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Word w : s.words()) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace nmonoid
