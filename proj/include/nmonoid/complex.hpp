#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "nmonoid/arithmetical.hpp"
#include "nmonoid/error.hpp"
#include "nmonoid/omission.hpp"
#include "nmonoid/parallel.hpp"

namespace nmonoid {

using IndexSet = std::vector<Int>;

/// The family of omission sets G within {2, ..., w-2} whose removal preserves
/// the set of length sets, viewed as a set system on the ground set. Subsets
/// are addressed by bitmask over ground_set (bit i <-> ground_set[i]).
class OmissionComplex {
 public:
  OmissionComplex(IndexSet ground, std::vector<char> face_mask, Shortcut shortcut, std::size_t assumed)
      : ground_(std::move(ground)), face_(std::move(face_mask)), shortcut_(shortcut), assumed_(assumed) {
    derive();
  }

  const IndexSet& ground_set() const noexcept { return ground_; }
  const std::vector<IndexSet>& faces() const noexcept { return faces_; }
  const std::vector<IndexSet>& maximal_faces() const noexcept { return maximal_; }
  const std::vector<IndexSet>& minimal_nonfaces() const noexcept { return minimal_nonfaces_; }
  bool downward_closed() const noexcept { return downward_closed_; }
  Shortcut shortcut_used() const noexcept { return shortcut_; }
  /// Number of subsets marked as non-faces without being evaluated (fast mode).
  std::size_t assumed_nonfaces() const noexcept { return assumed_; }

  std::size_t subset_count() const noexcept { return face_.size(); }
  bool is_face_mask(std::uint32_t mask) const { return face_.at(mask) != 0; }
  bool is_face(const IndexSet& g) const { return is_face_mask(to_mask(g)); }
  const std::vector<char>& face_table() const noexcept { return face_; }

  std::uint32_t to_mask(const IndexSet& g) const {
    std::uint32_t mask = 0;
    for (Int i : g) {
      const auto it = std::find(ground_.begin(), ground_.end(), i);
      if (it == ground_.end()) {
        throw MonoidError(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " not in the ground set");
      }
      mask |= 1U << static_cast<unsigned>(it - ground_.begin());
    }
    return mask;
  }

  IndexSet to_indices(std::uint32_t mask) const {
    IndexSet out;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (mask & (1U << i)) out.push_back(ground_[i]);
    }
    return out;
  }

  /// Masks ordered by cardinality, then by their index lists.
  std::vector<std::uint32_t> ordered_masks() const {
    std::vector<std::uint32_t> masks(face_.size());
    std::iota(masks.begin(), masks.end(), 0U);
    std::sort(masks.begin(), masks.end(), [&](std::uint32_t x, std::uint32_t y) {
      const int px = std::popcount(x), py = std::popcount(y);
      if (px != py) return px < py;
      return to_indices(x) < to_indices(y);
    });
    return masks;
  }

 private:
  void derive() {
    const auto full = static_cast<std::uint32_t>(face_.size() - 1);
    downward_closed_ = true;
    for (std::uint32_t mask : ordered_masks()) {
      if (face_[mask]) {
        faces_.push_back(to_indices(mask));
        bool maximal = true;
        for (std::uint32_t sup = (mask + 1) | mask; sup <= full && maximal; sup = (sup + 1) | mask) {
          if (face_[sup]) maximal = false;
          if (sup == full) break;
        }
        if (maximal) maximal_.push_back(to_indices(mask));
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
          if (!face_[mask & ~(bits & -bits)]) downward_closed_ = false;
        }
      } else {
        bool minimal = true;
        for (std::uint32_t sub = (mask - 1) & mask; mask != 0; sub = (sub - 1) & mask) {
          if (!face_[sub]) {
            minimal = false;
            break;
          }
          if (sub == 0) break;
        }
        if (minimal) minimal_nonfaces_.push_back(to_indices(mask));
      }
    }
  }

  IndexSet ground_;
  std::vector<char> face_;
  Shortcut shortcut_;
  std::size_t assumed_;
  std::vector<IndexSet> faces_;
  std::vector<IndexSet> maximal_;
  std::vector<IndexSet> minimal_nonfaces_;
  bool downward_closed_ = true;
};

struct ComplexOptions {
  bool use_shortcut = true;
  /// Skip evaluating supersets of known non-faces. Only sound if the family
  /// is downward closed, so it is off by default.
  bool fast = false;
  unsigned threads = 1;
};

inline constexpr Int kMaxGroundSize = 24;

inline OmissionComplex build_complex(const ArithmeticalMonoid& m, ComplexOptions opts = {}) {
  if (m.w() < 4) throw MonoidError(ErrorKind::WTooSmall, "the omission complex needs w >= 4");
  IndexSet ground;
  for (Int i = 2; i <= m.w() - 2; ++i) ground.push_back(i);
  if (static_cast<Int>(ground.size()) > kMaxGroundSize) {
    throw MonoidError(ErrorKind::IndexOutOfRange, "ground set too large to enumerate");
  }
  const std::size_t count = std::size_t{1} << ground.size();
  auto indices_of = [&](std::uint32_t mask) {
    IndexSet out;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (mask & (1U << i)) out.push_back(ground[i]);
    }
    return out;
  };

  if (opts.use_shortcut && m.a() >= m.w() * m.w() - 3 * m.w()) {
    return {std::move(ground), std::vector<char>(count, 1), Shortcut::len_bound, 0};
  }

  const auto base = base_collection(m);
  const DecideOptions decide{.use_shortcut = false};
  std::vector<char> face(count, 0);
  std::size_t assumed = 0;

  if (!opts.fast) {
    parallel_for(count, opts.threads, [&](std::size_t mask) {
      face[mask] = decide_length_sets_equal(m, indices_of(static_cast<std::uint32_t>(mask)), base, decide)
                           .lengths_equal.value()
                       ? 1
                       : 0;
    });
    return {std::move(ground), std::move(face), Shortcut::none, 0};
  }

  // Layer by cardinality; a set with a non-face immediate subset is assumed
  // to be a non-face.
  for (int layer = 0; layer <= static_cast<int>(ground.size()); ++layer) {
    std::vector<std::uint32_t> todo;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (std::popcount(mask) != layer) continue;
      bool pruned = false;
      for (std::uint32_t bits = mask; bits != 0 && !pruned; bits &= bits - 1) {
        pruned = !face[mask & ~(bits & -bits)];
      }
      if (pruned) {
        ++assumed;
      } else {
        todo.push_back(mask);
      }
    }
    parallel_for(todo.size(), opts.threads, [&](std::size_t i) {
      face[todo[i]] = decide_length_sets_equal(m, indices_of(todo[i]), base, decide).lengths_equal.value() ? 1 : 0;
    });
  }
  return {std::move(ground), std::move(face), Shortcut::none, assumed};
}

/// Pairs (G, G') with G a face, G' a proper subset of G, and G' not a face.
inline std::vector<std::pair<IndexSet, IndexSet>> downward_closure_violations(const OmissionComplex& c) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  for (std::uint32_t mask : c.ordered_masks()) {
    if (!c.is_face_mask(mask) || mask == 0) continue;
    for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      if (!c.is_face_mask(sub)) out.emplace_back(c.to_indices(mask), c.to_indices(sub));
      if (sub == 0) break;
    }
  }
  return out;
}

/// Face table generated by the downward closures of `maximal`.
inline std::vector<char> faces_from_maximal(const OmissionComplex& c, const std::vector<IndexSet>& maximal) {
  std::vector<char> face(c.subset_count(), 0);
  for (const auto& g : maximal) {
    const std::uint32_t mask = c.to_mask(g);
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      face[sub] = 1;
      if (sub == 0) break;
    }
  }
  return face;
}

/// Face table whose non-faces are exactly the supersets of `minimal_nonfaces`.
inline std::vector<char> faces_from_minimal_nonfaces(const OmissionComplex& c,
                                                     const std::vector<IndexSet>& minimal_nonfaces) {
  std::vector<char> face(c.subset_count(), 1);
  std::vector<std::uint32_t> masks;
  for (const auto& g : minimal_nonfaces) masks.push_back(c.to_mask(g));
  for (std::uint32_t mask = 0; mask < c.subset_count(); ++mask) {
    for (std::uint32_t nf : masks) {
      if ((mask & nf) == nf) face[mask] = 0;
    }
  }
  return face;
}

struct SurveyCell {
  Int a;
  Int d;
  Int w;
  std::size_t faces = 0;
  std::size_t subsets = 0;
  std::vector<IndexSet> maximal_faces = {};
  std::vector<IndexSet> minimal_nonfaces = {};
  bool downward_closed = true;
  std::size_t violations = 0;
  Shortcut shortcut_used = Shortcut::none;
};

/// Builds the complex of every valid (a, d, w) in the given ranges (gcd(a, d)
/// = 1, 4 <= w < a), in (a, d, w) order. Downward-closure failures are
/// reported on stderr.
inline std::vector<SurveyCell> complex_survey(const std::vector<Int>& as, const std::vector<Int>& ds,
                                              const std::vector<Int>& ws, ComplexOptions opts = {},
                                              unsigned threads = 0) {
  std::vector<SurveyCell> cells;
  for (Int a : as) {
    for (Int d : ds) {
      for (Int w : ws) {
        if (a < 1 || d < 1 || w < 4 || w >= a || std::gcd(a, d) != 1) continue;
        cells.push_back({.a = a, .d = d, .w = w});
      }
    }
  }
  opts.threads = 1;
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    auto& cell = cells[i];
    const auto c = build_complex(ArithmeticalMonoid(cell.a, cell.d, cell.w), opts);
    cell.faces = c.faces().size();
    cell.subsets = c.subset_count();
    cell.maximal_faces = c.maximal_faces();
    cell.minimal_nonfaces = c.minimal_nonfaces();
    cell.downward_closed = c.downward_closed();
    cell.violations = downward_closure_violations(c).size();
    cell.shortcut_used = c.shortcut_used();
  });
  for (const auto& cell : cells) {
    if (!cell.downward_closed) {
      std::fprintf(stderr,
                   "COUNTEREXAMPLE: omission family of (a=%lld, d=%lld, w=%lld) is not closed under subsets "
                   "(%zu violating pairs)\n",
                   static_cast<long long>(cell.a), static_cast<long long>(cell.d), static_cast<long long>(cell.w),
                   cell.violations);
    }
  }
  return cells;
}

}  // namespace nmonoid
