#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nmonoid/error.hpp"
#include "nmonoid/length_set.hpp"

namespace nmonoid {

/// Multiplicities aligned with NumericalMonoid::generators().
using FactorizationVector = std::vector<Int>;

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

namespace detail {

inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

// Whether `target` is a non-negative combination of `gens`; gens need not be
// cofinite.
inline bool representable(std::span<const Int> gens, Int target) {
  if (target == 0) return true;
  if (gens.empty() || target < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (Int n = 1; n <= target; ++n) {
    for (Int g : gens) {
      if (g <= n && reach[static_cast<std::size_t>(n - g)]) {
        reach[static_cast<std::size_t>(n)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

// Least element of <gens> in each residue class mod m (Dijkstra over residues).
inline std::vector<Int> least_per_residue(std::span<const Int> gens, Int m) {
  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [dv, r] = pq.top();
    pq.pop();
    if (dv != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      const Int next = (r + g) % m;
      const Int cand = dv + g;
      if (cand < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = cand;
        pq.emplace(cand, next);
      }
    }
  }
  return dist;
}

}  // namespace detail

class NumericalMonoid;
NumericalMonoid make_monoid(std::vector<Int> candidates);

/// A cofinite additive submonoid of the non-negative integers, stored by its
/// minimal generating set. Immutable; the Apéry set with respect to the
/// smallest generator is computed once at construction and backs membership
/// and the Frobenius number.
class NumericalMonoid {
 public:
  std::span<const Int> generators() const noexcept { return gens_; }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  Int multiplicity() const noexcept { return gens_.front(); }
  Int largest_generator() const noexcept { return gens_.back(); }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    return n >= apery_[static_cast<std::size_t>(n % multiplicity())];
  }

  /// Apéry set with respect to the smallest generator.
  std::span<const Int> apery() const noexcept { return apery_; }

  Int frobenius() const noexcept {
    return *std::max_element(apery_.begin(), apery_.end()) - multiplicity();
  }

  friend bool operator==(const NumericalMonoid& x, const NumericalMonoid& y) {
    return x.gens_ == y.gens_;
  }

 private:
  friend NumericalMonoid make_monoid(std::vector<Int> candidates);

  explicit NumericalMonoid(std::vector<Int> minimal_gens)
      : gens_(std::move(minimal_gens)),
        apery_(detail::least_per_residue(gens_, gens_.front())) {}

  std::vector<Int> gens_;
  std::vector<Int> apery_;
};

/// Canonicalizes a candidate generator list to the minimal generating set of
/// the monoid it generates. Idempotent.
inline NumericalMonoid make_monoid(std::vector<Int> candidates) {
  if (candidates.empty()) throw MonoidError(ErrorKind::EmptyInput, "no generators given");
  for (Int g : candidates) {
    if (g <= 0) {
      throw MonoidError(ErrorKind::NonPositiveGenerator,
                        "generator " + std::to_string(g) + " is not positive");
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (const Int g = detail::gcd_of(candidates); g != 1) {
    throw MonoidError(ErrorKind::GcdNotOne,
                      "generators share the common factor " + std::to_string(g));
  }
  // Only smaller generators can represent a larger one, so one ascending
  // pass reaches the fixed point of "drop anything the rest represent".
  std::vector<Int> minimal;
  for (Int g : candidates) {
    if (!detail::representable(minimal, g)) minimal.push_back(g);
  }
  return NumericalMonoid(std::move(minimal));
}

inline bool contains(const NumericalMonoid& s, Int n) noexcept { return s.contains(n); }

/// Least element of S in each residue class modulo m, for m a positive member.
inline std::vector<Int> apery_set(const NumericalMonoid& s, Int m) {
  if (m <= 0 || !s.contains(m)) {
    throw MonoidError(ErrorKind::NotAMember, std::to_string(m) + " is not a positive element of S");
  }
  if (m == s.multiplicity()) return {s.apery().begin(), s.apery().end()};
  return detail::least_per_residue(s.generators(), m);
}

/// Largest integer outside S; -1 when S is all of the non-negative integers.
inline Int frobenius(const NumericalMonoid& s) noexcept { return s.frobenius(); }

/// Every factorization of n, by bounded recursive enumeration. This is the
/// brute-force reference, not the production path: it refuses with
/// OracleTooLarge once more than `node_budget` search nodes are visited.
inline std::vector<FactorizationVector> factorizations(const NumericalMonoid& s, Int n,
                                                       std::uint64_t node_budget = kDefaultOracleBudget) {
  std::vector<FactorizationVector> out;
  if (n < 0) return out;
  const auto gens = s.generators();
  const std::size_t k = gens.size();
  FactorizationVector current(k, 0);
  std::uint64_t nodes = 0;

  // Fix multiplicities from the largest generator down; the smallest one
  // absorbs the remainder.
  std::function<void(std::size_t, Int)> descend = [&](std::size_t i, Int rest) {
    if (++nodes > node_budget) {
      throw MonoidError(ErrorKind::OracleTooLarge,
                        "factorization enumeration exceeded " + std::to_string(node_budget) + " nodes");
    }
    if (i == 0) {
      if (rest % gens[0] == 0) {
        current[0] = rest / gens[0];
        out.push_back(current);
        current[0] = 0;
      }
      return;
    }
    for (Int z = 0; z * gens[i] <= rest; ++z) {
      current[i] = z;
      descend(i - 1, rest - z * gens[i]);
    }
    current[i] = 0;
  };
  descend(k - 1, n);
  std::sort(out.begin(), out.end());
  return out;
}

inline Int factorization_length(const FactorizationVector& z) {
  return std::accumulate(z.begin(), z.end(), Int{0});
}

}  // namespace nmonoid
