#include <gtest/gtest.h>

#include "generators.hpp"
#include "hankel_lab/errors.hpp"
#include "hankel_lab/eventually_periodic.hpp"

namespace hankel_lab {
namespace {

using testing::ints;

TEST(EventuallyPeriodic, ReducesToMinimalCycle) {
  EventuallyPeriodic seq({}, ints({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(seq.period(), ints({1, 0}));
  EXPECT_EQ(seq.star(), "(1,0)*");
}

TEST(EventuallyPeriodic, RollsPreperiodIntoCycle) {
  // (1, (0,-1,1)*) is (1,0,-1)* with the first period written separately.
  EventuallyPeriodic seq(ints({1}), ints({0, -1, 1}));
  EXPECT_TRUE(seq.preperiod().empty());
  EXPECT_EQ(seq.period(), ints({1, 0, -1}));
  EXPECT_EQ(seq, EventuallyPeriodic({}, ints({1, 0, -1})));
}

TEST(EventuallyPeriodic, KeepsGenuinePreperiod) {
  EventuallyPeriodic seq(ints({5, 1}), ints({2, 3}));
  EXPECT_EQ(seq.preperiod(), ints({5, 1}));
  EXPECT_EQ(seq.star(), "(5,1 | 2,3)*");
  EXPECT_EQ(seq.expand(7), ints({5, 1, 2, 3, 2, 3, 2}));
  EXPECT_EQ(seq.term(100), BigInt(2));
  EXPECT_EQ(seq.term(101), BigInt(3));
}

TEST(EventuallyPeriodic, RejectsEmptyCycle) {
  EXPECT_THROW(EventuallyPeriodic({}, {}), std::invalid_argument);
}

TEST(EventuallyPeriodic, Constant) {
  EXPECT_EQ(EventuallyPeriodic::constant(1).star(), "(1)*");
  EXPECT_EQ(EventuallyPeriodic::constant(1), EventuallyPeriodic(ints({1, 1}), ints({1, 1, 1})));
}

TEST(ParseStar, AcceptsLenientSpellings) {
  const EventuallyPeriodic expected({}, ints({1, 0, -1, -1, 0, 1}));
  EXPECT_EQ(parse_star("(1,0,-1,-1,0,1)*"), expected);
  EXPECT_EQ(parse_star("(1, 0, -1, -1, 0, 1)^*"), expected);
  EXPECT_EQ(parse_star("(1,0,−1,−1,0,1)*"), expected);
  EXPECT_EQ(parse_star("(5 | 1,2)*"), EventuallyPeriodic(ints({5}), ints({1, 2})));
}

TEST(ParseStar, RejectsMalformedInput) {
  EXPECT_THROW(parse_star("(1,0"), ParseError);
  EXPECT_THROW(parse_star("()*"), ParseError);
  EXPECT_THROW(parse_star("(1,0)*x"), ParseError);
  EXPECT_THROW(parse_star("(1,,0)*"), ParseError);
}

TEST(EventuallyPeriodicProperty, NormalizeIsIdempotentAndPreservesTerms) {
  testing::Gen gen(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto pre = gen.ints(static_cast<std::size_t>(gen.uniform(0, 4)), -1, 1);
    auto base = gen.ints(static_cast<std::size_t>(gen.uniform(1, 4)), -1, 1);
    std::vector<BigInt> cycle;
    const int copies = gen.uniform(1, 3);
    for (int c = 0; c < copies; ++c) cycle.insert(cycle.end(), base.begin(), base.end());

    const EventuallyPeriodic once = normalize(pre, cycle);
    const EventuallyPeriodic twice = normalize(once.preperiod(), once.period());
    EXPECT_EQ(once, twice);
    EXPECT_LE(once.period_length(), base.size());
    EXPECT_LE(once.preperiod().size(), pre.size());

    std::vector<BigInt> raw = pre;
    while (raw.size() < 40) raw.insert(raw.end(), cycle.begin(), cycle.end());
    raw.resize(40);
    EXPECT_EQ(once.expand(40), raw);
    EXPECT_EQ(parse_star(once.star()), once);
  }
}

}  // namespace
}  // namespace hankel_lab
