#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nmonoid/length_set.hpp"

using nmonoid::Int;
using nmonoid::LengthSet;

TEST(LengthSet, BasicQueries) {
  const LengthSet s{3, 0, 70, 5};
  EXPECT_EQ(s.size(), 4U);
  EXPECT_EQ(s.min(), 0);
  EXPECT_EQ(s.max(), 70);
  EXPECT_TRUE(s.contains(70));
  EXPECT_FALSE(s.contains(4));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_EQ(s.lengths(), (std::vector<Int>{0, 3, 5, 70}));
}

TEST(LengthSet, EraseTrimsStorage) {
  LengthSet s{1, 2};
  LengthSet t{1, 2, 200};
  EXPECT_NE(s, t);
  t.erase(200);
  EXPECT_EQ(s, t);
  EXPECT_EQ(s.words().size(), t.words().size());
  EXPECT_EQ(nmonoid::LengthSetHash{}(s), nmonoid::LengthSetHash{}(t));
}

TEST(LengthSet, EmptySet) {
  LengthSet s;
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.size(), 0U);
  s.insert(0);
  s.erase(0);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s, LengthSet{});
}

TEST(LengthSet, AgreesWithStdSetOnRandomInput) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> len(0, 300);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<Int> ref;
    LengthSet s;
    const int ops = static_cast<int>(rng() % 40);
    for (int i = 0; i < ops; ++i) {
      const Int l = len(rng);
      if (rng() % 4 == 0) {
        ref.erase(l);
        s.erase(l);
      } else {
        ref.insert(l);
        s.insert(l);
      }
    }
    ASSERT_EQ(s.lengths(), std::vector<Int>(ref.begin(), ref.end()));
    ASSERT_EQ(s.size(), ref.size());
    if (!ref.empty()) {
      ASSERT_EQ(s.min(), *ref.begin());
      ASSERT_EQ(s.max(), *ref.rbegin());
    }
    ASSERT_EQ(LengthSet::from_lengths(s.lengths()), s);
    ASSERT_EQ(LengthSet::from_bits(s.words()), s);
  }
}
