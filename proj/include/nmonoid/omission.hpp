#pragma once

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nmonoid/arithmetical.hpp"
#include "nmonoid/error.hpp"
#include "nmonoid/length_table.hpp"
#include "nmonoid/monoid.hpp"
#include "nmonoid/parallel.hpp"

namespace nmonoid {

enum class Shortcut { none, len_bound, frob_bound, single_middle, single_edge };

constexpr std::string_view shortcut_name(Shortcut s) noexcept {
  switch (s) {
    case Shortcut::none: return "none";
    case Shortcut::len_bound: return "len_bound";
    case Shortcut::frob_bound: return "frob_bound";
    case Shortcut::single_middle: return "single_middle";
    case Shortcut::single_edge: return "single_edge";
  }
  return "none";
}

/// Answer to "does omitting G preserve the set of length sets / the Frobenius
/// number". A question that was not asked stays nullopt.
///
/// witness: for a length-set inequality, the smallest element whose length set
/// (in either monoid) has no counterpart in the other; for a Frobenius
/// inequality, the larger of the two Frobenius numbers (absent when S' is not
/// cofinite).
struct OmissionVerdict {
  std::optional<bool> lengths_equal;
  std::optional<bool> frobenius_equal;
  Shortcut shortcut_used = Shortcut::none;
  std::optional<Int> witness = std::nullopt;
};

struct DecideOptions {
  bool use_shortcut = true;
};

/// Length sets {L(n) : n in T, n <= bound}, each mapped to the smallest n
/// realizing it.
class LengthSetCollection {
 public:
  LengthSetCollection(const NumericalMonoid& t, Int bound) {
    const LengthTable table(t, bound);
    for (Int n = 0; n <= bound; ++n) {
      if (!table.is_gap(n)) sets_.try_emplace(LengthSet::from_bits(table.row_bits(n)), n);
    }
  }

  std::size_t size() const noexcept { return sets_.size(); }
  bool contains(const LengthSet& s) const { return sets_.contains(s); }

  /// Smallest n <= limit whose length set is absent from `other`.
  std::optional<Int> first_missing_from(const LengthSetCollection& other, Int limit) const {
    std::optional<Int> best;
    for (const auto& [set, n] : sets_) {
      if (n <= limit && !other.contains(set) && (!best || n < *best)) best = n;
    }
    return best;
  }

 private:
  std::unordered_map<LengthSet, Int, LengthSetHash> sets_;
};

/// N = (w - 3)(a + wd): past N, S and S_* have the same elements and length
/// sets.
inline Int threshold_bound(const ArithmeticalMonoid& m) { return (m.w() - 3) * m.top(); }

/// Every length set of an element n <= N has maximum at most N / a, and a set
/// with minimum l is only realized at or below l (a + wd). Collections built
/// to this bound therefore answer membership in the full set of length sets
/// for every set coming from n <= N.
inline Int collection_bound(const ArithmeticalMonoid& m) { return (threshold_bound(m) / m.a() + 1) * m.top(); }

inline void check_middle_omission(const ArithmeticalMonoid& m, const std::vector<Int>& omitted) {
  if (m.w() < 4) throw MonoidError(ErrorKind::WTooSmall, "the length-set decision needs w >= 4");
  normalize_indices(omitted, 2, m.w() - 2);
}

/// The S-side collection, shared across every G for one M.
inline LengthSetCollection base_collection(const ArithmeticalMonoid& m) { return {expand(m), collection_bound(m)}; }

/// Decides L(S') = L(S) for G within {2, ..., w-2}. An element n > N of either
/// monoid has the same length set in S, S' and S_*, so the two sets of length
/// sets agree exactly when each length set of an element n <= N, on either
/// side, occurs on the other side. `base` must be base_collection(m).
inline OmissionVerdict decide_length_sets_equal(const ArithmeticalMonoid& m, const std::vector<Int>& omitted,
                                                const LengthSetCollection& base, DecideOptions opts = {}) {
  check_middle_omission(m, omitted);
  OmissionVerdict v;
  if (opts.use_shortcut && m.a() >= m.w() * m.w() - 3 * m.w()) {
    v.lengths_equal = true;
    v.shortcut_used = Shortcut::len_bound;
    return v;
  }
  const Int limit = threshold_bound(m);
  const LengthSetCollection reduced(omit(m, omitted), collection_bound(m));
  const auto left = base.first_missing_from(reduced, limit);
  const auto right = reduced.first_missing_from(base, limit);
  v.lengths_equal = !left && !right;
  if (left && right) {
    v.witness = std::min(*left, *right);
  } else if (left || right) {
    v.witness = left ? left : right;
  }
  return v;
}

inline OmissionVerdict decide_length_sets_equal(const ArithmeticalMonoid& m, const std::vector<Int>& omitted,
                                                DecideOptions opts = {}) {
  check_middle_omission(m, omitted);
  if (opts.use_shortcut && m.a() >= m.w() * m.w() - 3 * m.w()) {
    return {.lengths_equal = true, .frobenius_equal = std::nullopt, .shortcut_used = Shortcut::len_bound};
  }
  return decide_length_sets_equal(m, omitted, base_collection(m), opts);
}

/// Decides F(S') = F(S) for G within {1, ..., w-1}.
inline OmissionVerdict decide_frobenius_equal(const ArithmeticalMonoid& m, const std::vector<Int>& omitted,
                                              DecideOptions opts = {}) {
  const auto g = normalize_indices(omitted, 1, m.w() - 1);
  OmissionVerdict v;
  const bool middle_only =
      std::all_of(g.begin(), g.end(), [&](Int i) { return i >= 2 && i <= m.w() - 2; });
  const Int w = m.w();
  if (opts.use_shortcut && middle_only && m.a() > w * w - 3 * w + 1) {
    v.frobenius_equal = true;
    v.shortcut_used = Shortcut::frob_bound;
    return v;
  }
  const Int f_base = frobenius(expand(m));
  const auto rest = remaining_generators(m, g);
  if (detail::gcd_of(rest) != 1) {
    // S' is not cofinite; it has no Frobenius number.
    v.frobenius_equal = false;
    return v;
  }
  const Int f_reduced = frobenius(make_monoid(rest));
  v.frobenius_equal = f_base == f_reduced;
  if (f_base != f_reduced) v.witness = std::max(f_base, f_reduced);
  return v;
}

/// Closed-form classification of omitting the single generator index r.
inline OmissionVerdict classify_single_omission(const ArithmeticalMonoid& m, Int r) {
  const Int a = m.a(), d = m.d(), w = m.w();
  if (w < 2) throw MonoidError(ErrorKind::WTooSmall, "no interior generator to omit when w < 2");
  if (r < 1 || r > w - 1) {
    throw MonoidError(ErrorKind::IndexOutOfRange,
                      "index " + std::to_string(r) + " outside [1, " + std::to_string(w - 1) + "]");
  }
  OmissionVerdict v;
  const bool middle = r > 1 && r < w - 1;
  v.lengths_equal = middle;
  v.shortcut_used = middle ? Shortcut::single_middle : Shortcut::single_edge;
  if (middle) {
    // S \ S_r = {a + rd}, so F moves only when that element exceeds F(S),
    // which happens for w = a - 1.
    v.frobenius_equal = a + r * d < frobenius_closed(m);
  } else if (r == 1) {
    v.frobenius_equal = false;
  } else {
    const bool grows = a % w == 0 || ((a - 1) % w == 0 && d < a);
    v.frobenius_equal = !grows;
  }
  return v;
}

enum class Question { lengths, frobenius, both };

/// Routes an omission query: single indices go to the closed-form
/// classification, sets within {2, ..., w-2} to the table-based decision, and
/// larger sets touching index 1 or w-1 are reported as changing the set of
/// length sets (single_edge) without running the decision.
inline OmissionVerdict check_omission(const ArithmeticalMonoid& m, std::vector<Int> omitted, Question q,
                                      DecideOptions opts = {}) {
  omitted = normalize_indices(std::move(omitted), 1, m.w() - 1);
  OmissionVerdict v;
  const bool want_len = q != Question::frobenius;
  const bool want_frob = q != Question::lengths;
  if (omitted.empty()) {
    if (want_len) v.lengths_equal = true;
    if (want_frob) v.frobenius_equal = true;
    return v;
  }
  if (omitted.size() == 1 && opts.use_shortcut) {
    const auto c = classify_single_omission(m, omitted.front());
    if (want_len) v.lengths_equal = c.lengths_equal;
    if (want_frob) v.frobenius_equal = c.frobenius_equal;
    v.shortcut_used = c.shortcut_used;
    return v;
  }
  const bool touches_edge = omitted.front() == 1 || omitted.back() == m.w() - 1;
  if (want_len) {
    if (touches_edge) {
      v.lengths_equal = false;
      v.shortcut_used = Shortcut::single_edge;
    } else {
      v = decide_length_sets_equal(m, omitted, opts);
      v.frobenius_equal.reset();
    }
  }
  if (want_frob) {
    const auto f = decide_frobenius_equal(m, omitted, opts);
    v.frobenius_equal = f.frobenius_equal;
    if (v.shortcut_used == Shortcut::none) v.shortcut_used = f.shortcut_used;
    if (!v.witness && f.witness) v.witness = f.witness;
  }
  return v;
}

/// Smallest n <= window in `from` whose length set occurs for no element of
/// `into`. Exact: any element of `into` realizing a set L is at most
/// min(L) times the largest generator of `into`, so one table covers every
/// candidate.
inline std::optional<Int> find_length_set_outside(const NumericalMonoid& from, const NumericalMonoid& into,
                                                  Int window) {
  const LengthTable source(from, window);
  const Int reach = (window / from.multiplicity()) * into.largest_generator();
  const LengthTable target(into, reach);
  std::unordered_map<LengthSet, Int, LengthSetHash> realized;
  for (Int n = 0; n <= reach; ++n) {
    if (!target.is_gap(n)) realized.try_emplace(LengthSet::from_bits(target.row_bits(n)), n);
  }
  for (Int n = 0; n <= window; ++n) {
    if (!source.is_gap(n) && !realized.contains(LengthSet::from_bits(source.row_bits(n)))) return n;
  }
  return std::nullopt;
}

struct BoundaryMismatch {
  Int n;
  /// Which side n belongs to: 1 for S_1, w-1 for S_{w-1}.
  Int side;
};

struct BoundaryReport {
  Int bound = 0;
  std::size_t checked_s1 = 0;
  std::size_t checked_sw1 = 0;
  std::vector<BoundaryMismatch> failures = {};
};

/// For each n <= bound in S_1 (resp. S_{w-1}), looks for n' within 3d in
/// S_{w-1} (resp. S_1) with the same length set.
inline BoundaryReport check_boundary_lenset_match(const ArithmeticalMonoid& m, Int bound) {
  if (m.w() < 3) throw MonoidError(ErrorKind::WTooSmall, "the boundary comparison needs w >= 3");
  const Int radius = 3 * m.d();
  const LengthTable first(omit(m, {1}), bound + radius);
  const LengthTable last(omit(m, {m.w() - 1}), bound + radius);
  BoundaryReport report{.bound = bound};

  auto scan = [&](const LengthTable& from, const LengthTable& to, Int side, std::size_t& checked) {
    for (Int n = 0; n <= bound; ++n) {
      if (from.is_gap(n)) continue;
      ++checked;
      const auto bits = from.row_bits(n);
      bool found = false;
      for (Int np = std::max<Int>(0, n - radius); np <= n + radius && !found; ++np) {
        found = !to.is_gap(np) && std::equal(bits.begin(), bits.end(), to.row_bits(np).begin(),
                                             to.row_bits(np).end());
      }
      if (!found) report.failures.push_back({n, side});
    }
  };
  scan(first, last, 1, report.checked_s1);
  scan(last, first, m.w() - 1, report.checked_sw1);
  return report;
}

struct TightnessCell {
  Int w;
  Int d;
  std::optional<Int> largest_bad_a;
  std::size_t scanned = 0;
  std::size_t bad_count = 0;
};

inline Int tightness_limit(Int w) { return w * w - 3 * w + 1; }

/// For each (w, d), scans a in (w, w^2 - 3w + 1] with gcd(a, d) = 1 and
/// records the largest a where F(S) and F(S_*) differ. Cells come back ordered
/// by (w, d).
inline std::vector<TightnessCell> tightness_scan(const std::vector<Int>& ws, const std::vector<Int>& ds,
                                                 unsigned threads = 0) {
  struct Job {
    std::size_t cell;
    Int a;
  };
  std::vector<TightnessCell> cells;
  std::vector<Job> jobs;
  for (Int w : ws) {
    if (w < 6) std::fprintf(stderr, "warning: tightness scan at w = %lld is below the studied range w >= 6\n",
                            static_cast<long long>(w));
    for (Int d : ds) {
      if (d < 1) continue;
      cells.push_back({.w = w, .d = d, .largest_bad_a = std::nullopt});
      if (w < 4) continue;
      for (Int a = w + 1; a <= tightness_limit(w); ++a) {
        if (std::gcd(a, d) == 1) jobs.push_back({cells.size() - 1, a});
      }
    }
  }
  std::vector<char> differs(jobs.size(), 0);
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const auto& cell = cells[jobs[i].cell];
    const ArithmeticalMonoid m(jobs[i].a, cell.d, cell.w);
    std::vector<Int> middle(static_cast<std::size_t>(cell.w - 3));
    std::iota(middle.begin(), middle.end(), Int{2});
    differs[i] = frobenius(expand(m)) != frobenius(omit(m, middle)) ? 1 : 0;
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& cell = cells[jobs[i].cell];
    ++cell.scanned;
    if (differs[i]) {
      ++cell.bad_count;
      cell.largest_bad_a = std::max(cell.largest_bad_a.value_or(jobs[i].a), jobs[i].a);
    }
  }
  return cells;
}

}  // namespace nmonoid
