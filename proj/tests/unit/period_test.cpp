#include <gtest/gtest.h>

#include "generators.hpp"
#include "hankel_lab/period.hpp"
#include "json.hpp"

namespace hankel_lab {
namespace {

using testing::ints;

TEST(DetectPeriod, PurelyPeriodic) {
  const auto seq = parse_star("(1,0,-1,-1,0,1)*").expand(12);
  const PeriodReport report = detect_period(seq, 2);
  EXPECT_EQ(report.status, PeriodStatus::kPeriodicConjectured);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->star(), "(1,0,-1,-1,0,1)*");
  EXPECT_EQ(report.repeats_observed, 2u);
  EXPECT_EQ(report.terms_examined, 12u);
}

TEST(DetectPeriod, RepeatsAreRequired) {
  const auto seq = parse_star("(1,0,-1,-1,0,1)*").expand(12);
  EXPECT_EQ(detect_period(seq, 3).status, PeriodStatus::kNoPeriodFound);
}

TEST(DetectPeriod, FindsPreperiod) {
  const auto seq = EventuallyPeriodic(ints({7, 7, 3}), ints({1, 2})).expand(20);
  const auto report = detect_period(seq, 3);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->preperiod(), ints({7, 7, 3}));
  EXPECT_EQ(report.witness->period(), ints({1, 2}));
}

TEST(DetectPeriod, GrowingSequenceHasNone) {
  const auto report = detect_period(ints({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 2);
  EXPECT_EQ(report.status, PeriodStatus::kNoPeriodFound);
  EXPECT_FALSE(report.witness.has_value());
}

TEST(DetectPeriod, RejectsTinyInput) {
  EXPECT_THROW(detect_period(ints({1, 1, 1}), 2), std::invalid_argument);
  EXPECT_THROW(detect_period(ints({1, 1, 1, 1}), 1), std::invalid_argument);
}

TEST(DetectPeriod, LongestTablePeriodAtDefaultBudget) {
  const auto seq = direct_hankel_sequence(AvoidingSet(4, {1, 2}), 60);
  const auto report = detect_period(seq, 2);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->period_length(), 22u);
  EXPECT_TRUE(report.witness->preperiod().empty());
}

TEST(VerifyClaim, AcceptsAndRejects) {
  const AvoidingSet set(3, {1});
  const auto claim = parse_star("(1,1,0,-1,-1,-1,-1,0,1,1)*");
  EXPECT_TRUE(verify_claim(set, claim, 40));
  EXPECT_FALSE(verify_claim(set, parse_star("(1,1,0,-1,-1,-1,-1,0,1,0)*"), 40));
  EXPECT_THROW(verify_claim(set, claim, 19), std::invalid_argument);
}

TEST(Conjecture, Pattern) {
  EXPECT_EQ(conjecture_pattern(5).star(), "(1,0,0,0,1,1)*");
  EXPECT_EQ(conjecture_pattern(3).star(), "(1,0,-1,-1,-1,0,1,1)*");
  EXPECT_EQ(conjecture_pattern(4).star(), "(1,0,0,-1,-1,-1,0,0,1,1)*");
  EXPECT_THROW(conjecture_pattern(2), std::invalid_argument);
  EXPECT_THROW(conjecture_outcome(5, 10), std::invalid_argument);
}

TEST(Conjecture, SmallModuli) {
  for (int m = 3; m <= 6; ++m) {
    const auto outcome = conjecture_outcome(m, 4 * static_cast<std::size_t>(m) + 8);
    EXPECT_TRUE(outcome.holds) << m;
    EXPECT_FALSE(outcome.first_mismatch.has_value());
  }
}

TEST(CoveringTheorem, Labels) {
  EXPECT_EQ(covering_theorem(AvoidingSet(4, {})), "unrestricted-catalan");
  EXPECT_EQ(covering_theorem(AvoidingSet(4, {1, 3})), "even-modulus-odd-residues");
  EXPECT_EQ(covering_theorem(AvoidingSet(16, {4, 10, 16})), "primitive-feasible-set");
  EXPECT_EQ(covering_theorem(AvoidingSet(11, {2, 4, 6})), "primitive-feasible-set");
  EXPECT_EQ(covering_theorem(AvoidingSet(2, {2})), "arithmetic-progression-structure");
  EXPECT_FALSE(covering_theorem(AvoidingSet(17, {4, 10, 16})).has_value());
  EXPECT_FALSE(covering_theorem(AvoidingSet(10, {2, 8})).has_value());
  EXPECT_FALSE(covering_theorem(AvoidingSet(5, {2})).has_value());
}

TEST(PeriodReportJson, Fields) {
  auto report = detect_period(parse_star("(1,0,-1,-1,0,1)*").expand(12), 2);
  report.covering_theorem = "arithmetic-progression-structure";
  const auto json = nlohmann::json::parse(to_json(report));
  EXPECT_EQ(json["status"], "periodic_conjectured");
  EXPECT_EQ(json["period"].size(), 6u);
  EXPECT_EQ(json["period"][2], "-1");
  EXPECT_EQ(json["period_length"], 6);
  EXPECT_EQ(json["terms_examined"], 12);
  EXPECT_EQ(json["covering_theorem"], "arithmetic-progression-structure");
  const std::string none = to_json(detect_period(ints({1, 2, 3, 4, 5}), 2));
  EXPECT_EQ(none,
            "{\"status\":\"no_period_found\",\"preperiod\":[],\"period\":[],\"period_length\":0,"
            "\"terms_examined\":5}");
}

TEST(PeriodProperty, RecoversPlantedPeriods) {
  testing::Gen gen(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pre = gen.ints(static_cast<std::size_t>(gen.uniform(0, 5)), -3, 3);
    const auto cycle = gen.ints(static_cast<std::size_t>(gen.uniform(1, 8)), -3, 3);
    const EventuallyPeriodic planted(pre, cycle);
    const std::size_t repeats = static_cast<std::size_t>(gen.uniform(2, 3));
    const std::size_t length =
        std::max<std::size_t>(3 * planted.preperiod().size(),
                              planted.preperiod().size() + (repeats + 1) * planted.period_length());
    const auto report = detect_period(planted.expand(std::max<std::size_t>(length, 4)), repeats);
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_EQ(*report.witness, planted) << planted.star();
  }
}

TEST(PeriodProperty, VerifiedClaimsStayVerifiedOnShorterPrefixes) {
  testing::Gen gen(62);
  const std::vector<std::pair<AvoidingSet, const char*>> claims = {
      {AvoidingSet(3, {1, 2}), "(1,0,-1,-1,-1,0,1,1)*"},
      {AvoidingSet(5, {1, 2, 3}), "(1,0,0,-1,0,1,1,0,-1,0,0,1,1,1,0,0,0,1,1)*"},
      {AvoidingSet(4, {1, 2, 4}), "(1,0,-1,0,1)*"},
  };
  for (const auto& [set, text] : claims) {
    const auto claim = parse_star(text);
    const std::size_t minimum = 2 * claim.period_length();
    const std::size_t longest = minimum + static_cast<std::size_t>(gen.uniform(10, 30));
    ASSERT_TRUE(verify_claim(set, claim, longest));
    for (std::size_t terms = minimum; terms <= longest; terms += 3) {
      EXPECT_TRUE(verify_claim(set, claim, terms)) << set.literal() << " " << terms;
    }
  }
}

}  // namespace
}  // namespace hankel_lab
