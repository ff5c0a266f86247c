#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "nmonoid/length_table.hpp"
#include "nmonoid/monoid.hpp"
#include "oracle.hpp"

using namespace nmonoid;

namespace {

std::vector<Int> range_inclusive(Int lo, Int hi) {
  std::vector<Int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<Int> gens_of(const NumericalMonoid& s) { return {s.generators().begin(), s.generators().end()}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const MonoidError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected MonoidError";
  return ErrorKind::EmptyInput;
}

const NumericalMonoid& mcnugget() {
  static const NumericalMonoid s = make_monoid({6, 9, 20});
  return s;
}

const NumericalMonoid& eleven() {
  static const NumericalMonoid s = make_monoid(range_inclusive(11, 18));
  return s;
}

}  // namespace

TEST(MakeMonoid, KeepsMinimalInput) { EXPECT_EQ(gens_of(mcnugget()), (std::vector<Int>{6, 9, 20})); }

TEST(MakeMonoid, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { make_monoid({4, 6, 8, 10}); }), ErrorKind::GcdNotOne);
  EXPECT_EQ(kind_of([] { make_monoid({}); }), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { make_monoid({3, 0, 5}); }), ErrorKind::NonPositiveGenerator);
}

TEST(MakeMonoid, DropsRepresentableGenerators) {
  auto input = range_inclusive(11, 18);
  input.push_back(23);
  ASSERT_TRUE(oracle::representable_by_others(input, input.size() - 1));
  EXPECT_EQ(gens_of(make_monoid(input)), range_inclusive(11, 18));
  EXPECT_EQ(gens_of(make_monoid({9, 6, 6, 20, 12, 15})), (std::vector<Int>{6, 9, 20}));
}

TEST(MakeMonoid, MinimalAndIdempotentOnRandomLists) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto input = oracle::random_generators(rng, 2 + trial % 6, 40);
    const auto s = make_monoid(input);
    const auto gens = gens_of(s);
    ASSERT_TRUE(std::is_sorted(gens.begin(), gens.end()));
    for (std::size_t i = 0; i < gens.size(); ++i) ASSERT_FALSE(oracle::representable_by_others(gens, i));
    for (Int g : input) ASSERT_TRUE(oracle::member(gens, g));
    ASSERT_EQ(make_monoid(gens), s);
  }
}

TEST(LengthTable, ExampleRows) {
  const auto t = build_length_table(eleven(), 36);
  EXPECT_EQ(t.at(36), (LengthSet{2, 3}));
  EXPECT_EQ(t.at(0), (LengthSet{0}));
  EXPECT_TRUE(t.is_gap(10));
  EXPECT_FALSE(t.at(10).has_value());
  EXPECT_THROW((void)t.at(37), std::out_of_range);
}

TEST(LengthTable, ZeroBound) {
  const auto t = build_length_table(mcnugget(), 0);
  EXPECT_EQ(t.bound(), 0);
  EXPECT_EQ(t.at(0), (LengthSet{0}));
}

TEST(LengthSetOp, Examples) {
  EXPECT_EQ(length_set(eleven(), 11), (LengthSet{1}));
  EXPECT_EQ(length_set(eleven(), 36), (LengthSet{2, 3}));
  EXPECT_EQ(length_set(eleven(), 34), (LengthSet{2, 3}));
  EXPECT_FALSE(length_set(eleven(), 21).has_value());
  EXPECT_FALSE(length_set(eleven(), -4).has_value());
}

TEST(LengthSetOp, CacheGrowsOnDemand) {
  LengthSetCache cache(eleven(), 16);
  EXPECT_EQ(cache(36), (LengthSet{2, 3}));
  EXPECT_EQ(cache(500), length_set(eleven(), 500));
  EXPECT_FALSE(cache(21).has_value());
  EXPECT_GE(cache.table_for(500).bound(), 500);
}

TEST(Contains, Examples) {
  EXPECT_FALSE(contains(mcnugget(), 43));
  EXPECT_FALSE(oracle::member({6, 9, 20}, 43));
  EXPECT_TRUE(contains(mcnugget(), 0));
  EXPECT_TRUE(contains(eleven(), 0));
  EXPECT_FALSE(contains(eleven(), 21));
  EXPECT_FALSE(contains(eleven(), -1));
  EXPECT_TRUE(contains(eleven(), 22));
}

TEST(Factorizations, Examples) {
  const auto f36 = factorizations(eleven(), 36);
  const std::vector<FactorizationVector> expected{
      {0, 0, 0, 0, 0, 0, 0, 2},
      {0, 3, 0, 0, 0, 0, 0, 0},
      {1, 1, 1, 0, 0, 0, 0, 0},
      {2, 0, 0, 1, 0, 0, 0, 0},
  };
  EXPECT_EQ(f36, expected);
  EXPECT_EQ(factorizations(eleven(), 0), (std::vector<FactorizationVector>{FactorizationVector(8, 0)}));
  EXPECT_TRUE(factorizations(eleven(), 5).empty());
}

TEST(Factorizations, RefusesOverBudget) {
  EXPECT_EQ(factorizations(make_monoid({7, 11, 13, 17, 19}), 100, 1000).size(), 39U);
  EXPECT_EQ(kind_of([] { factorizations(make_monoid({7, 11, 13, 17, 19}), 400, 1000); }), ErrorKind::OracleTooLarge);
}

TEST(Factorizations, VectorsAreValidAndDistinct) {
  const auto s = make_monoid({5, 7, 11, 13});
  for (Int n = 0; n <= 90; ++n) {
    const auto fs = factorizations(s, n);
    std::set<FactorizationVector> seen(fs.begin(), fs.end());
    ASSERT_EQ(seen.size(), fs.size());
    for (const auto& z : fs) {
      Int total = 0;
      for (std::size_t i = 0; i < z.size(); ++i) total += z[i] * s.generators()[i];
      ASSERT_EQ(total, n);
    }
  }
}

TEST(Apery, Examples) {
  EXPECT_EQ(apery_set(make_monoid({2, 3}), 2), (std::vector<Int>{0, 3}));
  const std::vector<Int> expected{0, 49, 20, 9, 40, 29};
  for (Int rho = 0; rho < 6; ++rho) {
    ASSERT_EQ(oracle::least_in_class({6, 9, 20}, 6, rho), expected[static_cast<std::size_t>(rho)]);
  }
  EXPECT_EQ(apery_set(mcnugget(), 6), expected);
  EXPECT_EQ(apery_set(eleven(), 11).front(), 0);
  EXPECT_EQ(kind_of([] { apery_set(mcnugget(), 43); }), ErrorKind::NotAMember);
  EXPECT_EQ(kind_of([] { apery_set(mcnugget(), 0); }), ErrorKind::NotAMember);
}

TEST(Apery, NonMultiplicityModulus) {
  const auto ap = apery_set(mcnugget(), 20);
  ASSERT_EQ(ap.size(), 20U);
  for (Int rho = 0; rho < 20; ++rho) EXPECT_EQ(ap[static_cast<std::size_t>(rho)], oracle::least_in_class({6, 9, 20}, 20, rho));
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(oracle::frobenius({6, 9, 20}), 43);
  EXPECT_EQ(frobenius(mcnugget()), 43);
  EXPECT_EQ(frobenius(make_monoid({2, 3})), 1);
  EXPECT_EQ(oracle::frobenius(range_inclusive(11, 18)), 21);
  EXPECT_EQ(frobenius(eleven()), 21);
  EXPECT_EQ(frobenius(make_monoid({1, 5})), -1);
}

// Random monoids with generators <= 25, n <= 300.
class RandomMonoidProperties : public ::testing::TestWithParam<int> {};

TEST_P(RandomMonoidProperties, AgreeWithBruteForce) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) * 7919 + 1);
  const auto s = make_monoid(oracle::random_generators(rng, 2 + static_cast<std::size_t>(GetParam()) % 4, 25));
  const auto gens = gens_of(s);
  constexpr Int kBound = 300;
  const auto table = build_length_table(s, kBound);
  oracle::Lengths brute(gens);

  for (Int n = 0; n <= kBound; ++n) {
    const auto expected = brute.of(n);
    const auto row = table.at(n);
    ASSERT_EQ(row.has_value(), !expected.empty()) << "n=" << n;
    if (row) {
      ASSERT_EQ(row->lengths(), std::vector<Int>(expected.begin(), expected.end())) << "n=" << n;
    }
    ASSERT_EQ(contains(s, n), !expected.empty());
  }

  // The library's own enumerator, on a smaller window.
  for (Int n = 0; n <= 60; ++n) {
    std::set<Int> from_vectors;
    for (const auto& z : factorizations(s, n)) from_vectors.insert(factorization_length(z));
    const auto row = table.at(n);
    ASSERT_EQ(row.has_value(), !from_vectors.empty());
    if (row) {
      ASSERT_EQ(row->lengths(), std::vector<Int>(from_vectors.begin(), from_vectors.end()));
    }
  }

  const Int f = frobenius(s);
  ASSERT_EQ(f, oracle::frobenius(gens));
  if (f >= 0) {
    ASSERT_FALSE(contains(s, f));
  }
  for (Int n = f + 1; n <= f + 3 * s.multiplicity(); ++n) ASSERT_TRUE(contains(s, n));

  const Int m = s.multiplicity();
  const auto ap = apery_set(s, m);
  for (Int rho = 0; rho < m; ++rho) {
    const Int x = ap[static_cast<std::size_t>(rho)];
    ASSERT_EQ(x % m, rho);
    ASSERT_TRUE(contains(s, x));
    ASSERT_FALSE(contains(s, x - m));
  }

  for (Int n = 0; n <= kBound / 2; ++n) {
    for (Int np = n; n + np <= kBound; np += 7) {
      if (table.is_gap(n) || table.is_gap(np)) continue;
      ASSERT_TRUE(table.at(n + np)->contains(table.max_length(n) + table.max_length(np)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMonoidProperties, ::testing::Range(0, 40));
