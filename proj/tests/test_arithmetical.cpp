#include <gtest/gtest.h>

#include <numeric>

#include "nmonoid/arithmetical.hpp"
#include "nmonoid/length_table.hpp"
#include "oracle.hpp"

using namespace nmonoid;

namespace {

const ArithmeticalMonoid kEleven(11, 1, 7);

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const MonoidError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected MonoidError";
  return ErrorKind::EmptyInput;
}

template <class Fn>
void for_each_grid_monoid(Int max_a, Int max_d, Int min_w, Fn&& fn) {
  for (Int a = 2; a <= max_a; ++a) {
    for (Int d = 1; d <= max_d; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (Int w = min_w; w < a; ++w) fn(ArithmeticalMonoid(a, d, w));
    }
  }
}

std::vector<Int> gens_of(const NumericalMonoid& s) { return {s.generators().begin(), s.generators().end()}; }

}  // namespace

TEST(ArithmeticalMonoid, RejectsInvalidParameters) {
  EXPECT_EQ(kind_of([] { ArithmeticalMonoid(6, 4, 2); }), ErrorKind::InvalidArithmetical);
  EXPECT_EQ(kind_of([] { ArithmeticalMonoid(5, 1, 5); }), ErrorKind::InvalidArithmetical);
  EXPECT_EQ(kind_of([] { ArithmeticalMonoid(5, 0, 2); }), ErrorKind::InvalidArithmetical);
}

TEST(CanonicalCoords, Examples) {
  EXPECT_EQ(canonical_coords(kEleven, 36), (CanonicalCoords{3, 3}));
  EXPECT_EQ(canonical_coords(kEleven, 11), (CanonicalCoords{1, 0}));
  EXPECT_EQ(canonical_coords(ArithmeticalMonoid(23, 3, 11), 56), (CanonicalCoords{1, 11}));
  EXPECT_EQ(canonical_coords(kEleven, 21), (CanonicalCoords{1, 10}));
  EXPECT_EQ(canonical_coords(kEleven, 17), (CanonicalCoords{1, 6}));
}

TEST(CanonicalCoords, ReconstructsEveryInteger) {
  for_each_grid_monoid(30, 7, 1, [](const ArithmeticalMonoid& m) {
    for (Int n = -50; n <= 200; ++n) {
      const auto [c1, c2] = canonical_coords(m, n);
      ASSERT_EQ(c1 * m.a() + c2 * m.d(), n);
      ASSERT_GE(c2, 0);
      ASSERT_LT(c2, m.a());
    }
  });
}

TEST(ContainsClosed, Examples) {
  EXPECT_FALSE(contains_closed(kEleven, 21));
  EXPECT_TRUE(contains_closed(kEleven, 36));
  EXPECT_TRUE(contains_closed(kEleven, 0));
  EXPECT_FALSE(contains_closed(kEleven, -11));
}

TEST(LengthSetClosed, Examples) {
  EXPECT_EQ(length_set_closed(kEleven, 36), (LengthSet{2, 3}));
  EXPECT_EQ(length_set_closed(kEleven, 11), (LengthSet{1}));
  EXPECT_EQ(length_set_closed(kEleven, 34), (LengthSet{2, 3}));
  EXPECT_FALSE(length_set_closed(kEleven, 21).has_value());
  EXPECT_EQ(length_set_closed(kEleven, 0), (LengthSet{0}));
}

TEST(FrobeniusClosed, Examples) {
  EXPECT_EQ(frobenius_closed(kEleven), 21);
  EXPECT_EQ(frobenius_closed(ArithmeticalMonoid(14, 1, 7)), 27);
  EXPECT_EQ(frobenius_closed(ArithmeticalMonoid(2, 1, 1)), 1);
}

TEST(Expand, Examples) {
  std::vector<Int> b;
  for (Int g = 23; g <= 56; g += 3) b.push_back(g);
  EXPECT_EQ(gens_of(expand(ArithmeticalMonoid(23, 3, 11))), b);
  std::vector<Int> c;
  for (Int g = 51; g <= 67; g += 2) c.push_back(g);
  EXPECT_EQ(gens_of(expand(ArithmeticalMonoid(51, 2, 8))), c);
  EXPECT_EQ(gens_of(expand(kEleven)), (std::vector<Int>{11, 12, 13, 14, 15, 16, 17, 18}));
}

TEST(Omit, Examples) {
  EXPECT_EQ(gens_of(omit(kEleven, {3})), (std::vector<Int>{11, 12, 13, 15, 16, 17, 18}));
  EXPECT_EQ(omit(kEleven, {}), expand(kEleven));
  const ArithmeticalMonoid m(23, 3, 11);
  std::vector<Int> middle;
  for (Int i = 2; i <= 9; ++i) middle.push_back(i);
  EXPECT_EQ(gens_of(omit(m, middle)), (std::vector<Int>{23, 26, 53, 56}));
  EXPECT_EQ(kind_of([] { omit(kEleven, {0}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { omit(kEleven, {7}); }), ErrorKind::IndexOutOfRange);
}

TEST(SrLengthSet, Examples) {
  EXPECT_EQ(sr_length_set(kEleven, 3, 36), (LengthSet{2, 3}));
  EXPECT_EQ(sr_length_set(kEleven, 1, 34), (LengthSet{2}));
  EXPECT_EQ(sr_length_set(kEleven, 1, 36), (LengthSet{2, 3}));
  EXPECT_FALSE(sr_length_set(kEleven, 3, 14).has_value());
  EXPECT_FALSE(sr_length_set(kEleven, 1, 12).has_value());
  EXPECT_EQ(kind_of([] { sr_length_set(kEleven, 7, 20); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { sr_length_set(ArithmeticalMonoid(5, 1, 2), 1, 20); }), ErrorKind::WTooSmall);
}

TEST(SrRemovedElements, Examples) {
  EXPECT_EQ(sr_removed_elements(kEleven, 3), (std::vector<Int>{14}));
  EXPECT_EQ(sr_removed_elements(kEleven, 1), (std::vector<Int>{12, 23}));
  const auto last = sr_removed_elements(ArithmeticalMonoid(14, 1, 7), 6);
  EXPECT_NE(std::find(last.begin(), last.end(), 41), last.end());
  EXPECT_EQ(last, (std::vector<Int>{20, 41}));
  EXPECT_EQ(sr_removed_elements(kEleven, 1, 20), (std::vector<Int>{12}));
  EXPECT_EQ(kind_of([] { sr_removed_elements(kEleven, 0); }), ErrorKind::IndexOutOfRange);
}

TEST(CongruenceEquivalence, Examples) {
  EXPECT_EQ(congruence_equivalence(kEleven, 17), std::make_pair(true, true));
  EXPECT_EQ(congruence_equivalence(kEleven, 36), std::make_pair(false, false));
  const ArithmeticalMonoid m(23, 3, 11);
  EXPECT_EQ(congruence_equivalence(m, m.top() - m.d()), std::make_pair(true, true));
}

// Closed forms against the DP and brute force on a reduced grid; the full
// grid lives in the acceptance suite.
TEST(ClosedForms, AgreeWithOracleOnSmallGrid) {
  for_each_grid_monoid(25, 5, 2, [](const ArithmeticalMonoid& m) {
    const auto s = expand(m);
    const Int bound = 4 * m.top();
    const auto table = build_length_table(s, bound);
    const auto reach = oracle::reachable(gens_of(s), bound);
    for (Int n = 0; n <= bound; ++n) {
      const bool member = reach[static_cast<std::size_t>(n)];
      ASSERT_EQ(contains_closed(m, n), member) << m.a() << "," << m.d() << "," << m.w() << " n=" << n;
      const auto closed = length_set_closed(m, n);
      ASSERT_EQ(closed, table.at(n));
      if (!closed) continue;
      const auto [c1, c2] = canonical_coords(m, n);
      ASSERT_EQ(closed->max(), c1);
      ASSERT_EQ(static_cast<Int>(closed->size()), (c1 * m.w() - c2) / m.top() + 1);
    }
    ASSERT_EQ(frobenius_closed(m), frobenius(s));
    ASSERT_EQ(frobenius_closed(m), oracle::frobenius(gens_of(s)));
  });
}

TEST(SingleOmission, ClosedFormsMatchDp) {
  for_each_grid_monoid(25, 5, 3, [](const ArithmeticalMonoid& m) {
    const auto s = expand(m);
    for (Int r = 1; r <= m.w() - 1; ++r) {
      const auto sr = omit(m, {r});
      const Int bound = std::max(3 * m.top(), frobenius(sr) + 1);
      const auto table = build_length_table(sr, bound);
      for (Int n = 0; n <= 3 * m.top(); ++n) {
        ASSERT_EQ(sr_length_set(m, r, n), table.at(n))
            << m.a() << "," << m.d() << "," << m.w() << " r=" << r << " n=" << n;
      }
      std::vector<Int> diff;
      for (Int n = 0; n <= bound; ++n) {
        if (s.contains(n) != sr.contains(n)) diff.push_back(n);
      }
      ASSERT_EQ(diff, sr_removed_elements(m, r));
    }
  });
}

TEST(CongruenceEquivalence, BothSidesAgree) {
  for_each_grid_monoid(30, 7, 1, [](const ArithmeticalMonoid& m) {
    for (Int n = 0; n <= 10 * m.top(); ++n) {
      const auto [x, y] = congruence_equivalence(m, n);
      ASSERT_EQ(x, y) << m.a() << "," << m.d() << "," << m.w() << " n=" << n;
    }
  });
}
