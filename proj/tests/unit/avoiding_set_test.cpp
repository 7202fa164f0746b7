#include <gtest/gtest.h>

#include "generators.hpp"
#include "hankel_lab/avoiding_set.hpp"
#include "hankel_lab/bigint.hpp"
#include "hankel_lab/errors.hpp"

namespace hankel_lab {
namespace {

TEST(AvoidingSet, SortsAndDeduplicates) {
  AvoidingSet set(5, {3, 1, 3});
  EXPECT_EQ(set.residues(), (std::vector<int>{1, 3}));
  EXPECT_EQ(set.literal(), "5:1,3");
  EXPECT_EQ(set.pretty(), "(5,{1,3})");
}

TEST(AvoidingSet, RejectsBadInput) {
  EXPECT_THROW(AvoidingSet(1, {}), std::invalid_argument);
  EXPECT_THROW(AvoidingSet(4, {0}), std::invalid_argument);
  EXPECT_THROW(AvoidingSet(4, {5}), std::invalid_argument);
}

TEST(AvoidingSet, MembershipUsesTheZeroClassAsM) {
  AvoidingSet set(3, {3});
  EXPECT_FALSE(set.contains(1));
  EXPECT_TRUE(set.contains(3));
  EXPECT_TRUE(set.contains(6));
  EXPECT_FALSE(set.contains(5));
  EXPECT_TRUE(set.contains(300));
  EXPECT_EQ(set.residue_of(0), 3);
  EXPECT_EQ(set.residue_of(-1), 2);
}

TEST(AvoidingSet, ShiftWrapsIntoRange) {
  EXPECT_EQ(AvoidingSet(4, {2, 4}).shift(-2), AvoidingSet(4, {2, 4}));
  EXPECT_EQ(AvoidingSet(5, {1, 2}).shift(-2), AvoidingSet(5, {4, 5}));
  EXPECT_EQ(AvoidingSet(3, {1}).shift(-1), AvoidingSet(3, {3}));
  EXPECT_EQ(AvoidingSet(10, {2, 8}).shift(3), AvoidingSet(10, {1, 5}));
}

TEST(AvoidingSet, ParityQueries) {
  EXPECT_TRUE(AvoidingSet(6, {2, 4}).all_even());
  EXPECT_FALSE(AvoidingSet(6, {2, 3}).all_even());
  EXPECT_TRUE(AvoidingSet(6, {1, 5}).all_odd());
  EXPECT_TRUE(AvoidingSet(6, {}).all_odd());
}

TEST(AvoidingSetParse, AcceptsLiterals) {
  EXPECT_EQ(parse_avoiding_set("3:1"), AvoidingSet(3, {1}));
  EXPECT_EQ(parse_avoiding_set("2:"), AvoidingSet(2, {}));
  EXPECT_EQ(parse_avoiding_set("10:4,8"), AvoidingSet(10, {4, 8}));
}

TEST(AvoidingSetParse, ReportsPosition) {
  try {
    parse_avoiding_set("4:2,7");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_avoiding_set("4"), ParseError);
  EXPECT_THROW(parse_avoiding_set("4:2,,3"), ParseError);
  EXPECT_THROW(parse_avoiding_set("x:1"), ParseError);
  EXPECT_THROW(parse_avoiding_set("1:"), ParseError);
  EXPECT_THROW(parse_avoiding_set("4:2,2"), ParseError);
}

TEST(AvoidingSetParse, LiteralRoundTrips) {
  for (int m = 2; m <= 6; ++m) {
    for (const auto& set : all_sets(m)) {
      EXPECT_EQ(parse_avoiding_set(set.literal()), set);
    }
  }
}

TEST(AllSets, CountsAndOrder) {
  const auto sets = all_sets(3);
  ASSERT_EQ(sets.size(), 8u);
  EXPECT_TRUE(sets.front().empty());
  EXPECT_EQ(sets[1], AvoidingSet(3, {1}));
  EXPECT_EQ(sets[2], AvoidingSet(3, {2}));
  EXPECT_EQ(sets[3], AvoidingSet(3, {1, 2}));
  EXPECT_EQ(sets.back(), AvoidingSet(3, {1, 2, 3}));
}

TEST(AvoidingSetProperty, ShiftIsInvertible) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const AvoidingSet set = gen.set_in(2, 12);
    const long t = gen.uniform(-30, 30);
    EXPECT_EQ(set.shift(t).shift(-t), set);
  }
}

TEST(AvoidingSetProperty, MembershipIsPeriodic) {
  testing::Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const AvoidingSet set = gen.set_in(2, 9);
    const long k = gen.uniform(1, 40);
    EXPECT_EQ(set.contains(k), set.contains(k + set.modulus()));
    EXPECT_EQ(set.shift(1).contains(k + 1), set.contains(k));
  }
}

TEST(BigIntHelpers, RenderingAndRationals) {
  EXPECT_EQ(to_decimal(BigInt("-123456789012345678901234567890")),
            "-123456789012345678901234567890");
  EXPECT_EQ(join(to_bigints({1, -2, 3})), "1,-2,3");
  EXPECT_EQ(join(std::vector<int>{4, 8}, ";"), "4;8");
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace hankel_lab
