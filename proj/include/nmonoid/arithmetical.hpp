#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmonoid/error.hpp"
#include "nmonoid/length_set.hpp"
#include "nmonoid/monoid.hpp"

namespace nmonoid {

namespace detail {

// Floor division for a positive divisor.
constexpr Int floor_div(Int num, Int den) noexcept {
  Int q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

constexpr Int ceil_div(Int num, Int den) noexcept { return -floor_div(-num, den); }

constexpr Int mod_pos(Int x, Int m) noexcept {
  const Int r = x % m;
  return r < 0 ? r + m : r;
}

// Inverse of x modulo m for gcd(x, m) = 1, via the extended Euclidean algorithm.
constexpr Int mod_inverse(Int x, Int m) noexcept {
  Int old_r = mod_pos(x, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return mod_pos(old_s, m);
}

}  // namespace detail

/// The monoid generated by a, a + d, ..., a + w*d with gcd(a, d) = 1 and w < a.
/// Generator indices i refer to a + i*d, 0 <= i <= w.
class ArithmeticalMonoid {
 public:
  ArithmeticalMonoid(Int a, Int d, Int w) : a_(a), d_(d), w_(w) {
    if (a < 1 || d < 1 || w < 1) {
      throw MonoidError(ErrorKind::InvalidArithmetical, "a, d and w must be positive");
    }
    if (std::gcd(a, d) != 1) {
      throw MonoidError(ErrorKind::InvalidArithmetical, "gcd(a, d) must be 1");
    }
    if (w >= a) throw MonoidError(ErrorKind::InvalidArithmetical, "w must be less than a");
  }

  Int a() const noexcept { return a_; }
  Int d() const noexcept { return d_; }
  Int w() const noexcept { return w_; }

  Int generator(Int i) const noexcept { return a_ + i * d_; }
  /// a + w*d, the largest generator.
  Int top() const noexcept { return a_ + w_ * d_; }

  friend bool operator==(const ArithmeticalMonoid&, const ArithmeticalMonoid&) = default;

 private:
  Int a_;
  Int d_;
  Int w_;
};

/// The unique (c1, c2) with n = c1*a + c2*d and 0 <= c2 < a.
struct CanonicalCoords {
  Int c1;
  Int c2;
  friend bool operator==(const CanonicalCoords&, const CanonicalCoords&) = default;
};

inline CanonicalCoords canonical_coords(const ArithmeticalMonoid& m, Int n) {
  const Int a = m.a();
  const Int c2 = detail::mod_pos(detail::mod_pos(n, a) * detail::mod_inverse(m.d(), a), a);
  return {(n - c2 * m.d()) / a, c2};
}

inline bool contains_closed(const ArithmeticalMonoid& m, Int n) {
  if (n < 0) return false;
  const auto [c1, c2] = canonical_coords(m, n);
  return c2 <= c1 * m.w();
}

/// Closed-form L_S(n) = {c1 - k*d : 0 <= k <= floor((c1*w - c2) / (a + w*d))}.
inline std::optional<LengthSet> length_set_closed(const ArithmeticalMonoid& m, Int n) {
  if (!contains_closed(m, n)) return std::nullopt;
  const auto [c1, c2] = canonical_coords(m, n);
  const Int k_max = detail::floor_div(c1 * m.w() - c2, m.top());
  LengthSet out;
  for (Int k = 0; k <= k_max; ++k) out.insert(c1 - k * m.d());
  return out;
}

inline Int frobenius_closed(const ArithmeticalMonoid& m) {
  const Int a = m.a();
  return (detail::ceil_div(a - 1, m.w()) - 1) * a + (a - 1) * m.d();
}

inline std::vector<Int> generator_list(const ArithmeticalMonoid& m) {
  std::vector<Int> gens;
  for (Int i = 0; i <= m.w(); ++i) gens.push_back(m.generator(i));
  return gens;
}

inline NumericalMonoid expand(const ArithmeticalMonoid& m) { return make_monoid(generator_list(m)); }

/// Sorted, deduplicated copy of an omission index set, validated against
/// [lo, hi].
inline std::vector<Int> normalize_indices(std::vector<Int> indices, Int lo, Int hi) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (Int i : indices) {
    if (i < lo || i > hi) {
      throw MonoidError(ErrorKind::IndexOutOfRange,
                        "omission index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
    }
  }
  return indices;
}

/// Generators a + i*d with i not in `omitted`, before canonicalization.
inline std::vector<Int> remaining_generators(const ArithmeticalMonoid& m, const std::vector<Int>& omitted) {
  const auto g = normalize_indices(omitted, 1, m.w() - 1);
  std::vector<Int> gens;
  for (Int i = 0; i <= m.w(); ++i) {
    if (!std::binary_search(g.begin(), g.end(), i)) gens.push_back(m.generator(i));
  }
  return gens;
}

/// S' = <a + i*d : 0 <= i <= w, i not in G>, for G within {1, ..., w-1}.
inline NumericalMonoid omit(const ArithmeticalMonoid& m, const std::vector<Int>& omitted) {
  return make_monoid(remaining_generators(m, omitted));
}

inline void check_single_index(const ArithmeticalMonoid& m, Int r) {
  // With w = 2 the single middle generator is both the first and the last
  // interior index and the edge-case descriptions below do not apply.
  if (m.w() < 3) throw MonoidError(ErrorKind::WTooSmall, "single-omission closed forms need w >= 3");
  if (r < 1 || r > m.w() - 1) {
    throw MonoidError(ErrorKind::IndexOutOfRange,
                      "index " + std::to_string(r) + " outside [1, " + std::to_string(m.w() - 1) + "]");
  }
}

/// Elements of S that leave the monoid when generator index r is omitted.
/// For 1 < r < w-1 this is just a + r*d; for the edge indices the elements
/// are n = c1*a + c2*d with (c2 = 1, w*c1 <= a + w*d) for r = 1 and
/// (c2 = c1*w - 1, w*c1 <= a) for r = w-1. The list is finite; `bound` only
/// truncates the report.
inline std::vector<Int> sr_removed_elements(const ArithmeticalMonoid& m, Int r,
                                            std::optional<Int> bound = std::nullopt) {
  check_single_index(m, r);
  const Int a = m.a(), d = m.d(), w = m.w();
  std::vector<Int> out;
  if (r > 1 && r < w - 1) {
    out.push_back(m.generator(r));
  } else {
    if (r == 1) {
      for (Int c1 = 1; w * c1 <= m.top(); ++c1) out.push_back(c1 * a + d);
    }
    if (r == w - 1) {
      for (Int c1 = 1; w * c1 <= a; ++c1) out.push_back(c1 * a + (c1 * w - 1) * d);
    }
  }
  if (bound) std::erase_if(out, [&](Int n) { return n > *bound; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool sr_contains(const ArithmeticalMonoid& m, Int r, Int n) {
  check_single_index(m, r);
  if (!contains_closed(m, n)) return false;
  const auto removed = sr_removed_elements(m, r);
  return !std::binary_search(removed.begin(), removed.end(), n);
}

/// Closed-form length set of n in S_r (S with generator index r omitted).
/// Membership is decided first; then r = 1 loses the maximum length exactly
/// when n = d (mod a), and r = w-1 loses the minimum exactly when
/// n = -d (mod a + w*d).
inline std::optional<LengthSet> sr_length_set(const ArithmeticalMonoid& m, Int r, Int n) {
  if (!sr_contains(m, r, n)) return std::nullopt;
  auto lengths = length_set_closed(m, n);
  if (r == 1 && detail::mod_pos(n - m.d(), m.a()) == 0) lengths->erase(lengths->max());
  if (r == m.w() - 1 && detail::mod_pos(n + m.d(), m.top()) == 0 && !lengths->empty()) {
    lengths->erase(lengths->min());
  }
  if (lengths->empty()) return std::nullopt;
  return lengths;
}

/// Evaluates (n = -d mod (a + w*d), c1*w = c2 + 1 mod (a + w*d)) separately;
/// the two conditions are expected to coincide.
inline std::pair<bool, bool> congruence_equivalence(const ArithmeticalMonoid& m, Int n) {
  const auto [c1, c2] = canonical_coords(m, n);
  const bool first = detail::mod_pos(n + m.d(), m.top()) == 0;
  const bool second = detail::mod_pos(c1 * m.w() - (c2 + 1), m.top()) == 0;
  return {first, second};
}

}  // namespace nmonoid
