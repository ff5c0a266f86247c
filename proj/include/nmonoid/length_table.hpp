#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nmonoid/length_set.hpp"
#include "nmonoid/monoid.hpp"

namespace nmonoid {

/// Length sets of every n in [0, bound], computed by dynamic programming over
/// n. Row n is the union over generators g <= n of (row(n - g) shifted by one
/// length). Rows are packed bit vectors of a fixed stride wide enough for the
/// largest possible length bound / multiplicity; gap rows are all-zero.
class LengthTable {
 public:
  LengthTable(const NumericalMonoid& s, Int bound)
      : gens_(s.generators().begin(), s.generators().end()), bound_(std::max<Int>(bound, 0)) {
    const auto max_len = static_cast<std::size_t>(bound_ / gens_.front());
    stride_ = words_for_bits(max_len + 1);
    const auto rows = static_cast<std::size_t>(bound_) + 1;
    bits_.assign(rows * stride_, 0);
    present_.assign(rows, 0);
    build();
  }

  Int bound() const noexcept { return bound_; }
  std::span<const Int> generators() const noexcept { return gens_; }

  bool in_range(Int n) const noexcept { return n >= 0 && n <= bound_; }

  bool is_gap(Int n) const {
    check(n);
    return present_[static_cast<std::size_t>(n)] == 0;
  }

  /// Raw packed row; all-zero for gaps.
  std::span<const Word> row_bits(Int n) const {
    check(n);
    return {bits_.data() + static_cast<std::size_t>(n) * stride_, stride_};
  }

  std::optional<LengthSet> at(Int n) const {
    if (is_gap(n)) return std::nullopt;
    return LengthSet::from_bits(row_bits(n));
  }

  /// Smallest length of a member row.
  Int min_length(Int n) const {
    const auto row = row_bits(n);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) return static_cast<Int>(i * kWordBits + std::countr_zero(row[i]));
    }
    return -1;
  }

  Int max_length(Int n) const {
    const auto row = row_bits(n);
    for (std::size_t i = row.size(); i-- > 0;) {
      if (row[i] != 0) return static_cast<Int>(i * kWordBits + (kWordBits - 1 - std::countl_zero(row[i])));
    }
    return -1;
  }

 private:
  void check(Int n) const {
    if (!in_range(n)) throw std::out_of_range("length table row out of range");
  }

  Word* mutable_row(Int n) { return bits_.data() + static_cast<std::size_t>(n) * stride_; }

  void build() {
    mutable_row(0)[0] = 1;
    present_[0] = 1;
    for (Int n = 1; n <= bound_; ++n) {
      Word* dst = mutable_row(n);
      bool any = false;
      for (Int g : gens_) {
        if (g > n) break;
        if (!present_[static_cast<std::size_t>(n - g)]) continue;
        const Word* src = mutable_row(n - g);
        Word carry = 0;
        for (std::size_t i = 0; i < stride_; ++i) {
          dst[i] |= (src[i] << 1) | carry;
          carry = src[i] >> (kWordBits - 1);
        }
        any = true;
      }
      present_[static_cast<std::size_t>(n)] = any ? 1 : 0;
#ifdef NMONOID_CHECK_INVARIANTS
      verify_row(n);
#endif
    }
  }

#ifdef NMONOID_CHECK_INVARIANTS
  void verify_row(Int n) const {
    for (Int g : gens_) {
      if (g > n || is_gap(n - g)) continue;
      const Int top = max_length(n - g) + 1;
      const auto row = row_bits(n);
      const auto idx = static_cast<std::size_t>(top);
      if (is_gap(n) || ((row[idx / kWordBits] >> (idx % kWordBits)) & 1U) == 0) {
        throw std::logic_error("length table recurrence violated at n = " + std::to_string(n));
      }
    }
  }
#endif

  std::vector<Int> gens_;
  Int bound_;
  std::size_t stride_ = 1;
  std::vector<Word> bits_;
  std::vector<char> present_;
};

inline LengthTable build_length_table(const NumericalMonoid& s, Int bound) {
  return LengthTable(s, bound);
}

/// Exact L_S(n), or nullopt when n is a gap.
inline std::optional<LengthSet> length_set(const NumericalMonoid& s, Int n) {
  if (!s.contains(n)) return std::nullopt;
  return LengthTable(s, n).at(n);
}

/// Length-set lookups for one monoid backed by a table that is rebuilt with a
/// doubled bound whenever a query falls outside it. Not thread-safe; give each
/// worker its own instance.
class LengthSetCache {
 public:
  explicit LengthSetCache(NumericalMonoid s, Int initial_bound = 256)
      : monoid_(std::move(s)), table_(monoid_, initial_bound) {}

  const NumericalMonoid& monoid() const noexcept { return monoid_; }

  std::optional<LengthSet> operator()(Int n) {
    if (!monoid_.contains(n)) return std::nullopt;
    return table_for(n).at(n);
  }

  const LengthTable& table_for(Int n) {
    if (n > table_.bound()) table_ = LengthTable(monoid_, std::max(n, 2 * table_.bound()));
    return table_;
  }

 private:
  NumericalMonoid monoid_;
  LengthTable table_;
};

}  // namespace nmonoid
