#include <gtest/gtest.h>

#include "generators.hpp"
#include "hankel_lab/errors.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/series.hpp"

namespace hankel_lab {
namespace {

using testing::ints;

TEST(Determinant, SmallMatrices) {
  EXPECT_EQ(bareiss_det(IntMatrix{{3}}), BigInt(3));
  EXPECT_EQ(bareiss_det(IntMatrix{{1, 2}, {3, 4}}), BigInt(-2));
  EXPECT_EQ(bareiss_det(IntMatrix{{0, 1}, {1, -2}}), BigInt(-1));
  EXPECT_EQ(bareiss_det(IntMatrix{{0, 1}, {1, -1}}), BigInt(-1));
  EXPECT_EQ(bareiss_det(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), BigInt(6));
  EXPECT_EQ(bareiss_det(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), BigInt(0));
  EXPECT_EQ(bareiss_det(IntMatrix(0)), BigInt(1));
  EXPECT_EQ(naive_det(IntMatrix(0)), BigInt(1));
}

TEST(Determinant, PivotsPastLeadingZeros) {
  const IntMatrix m{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(bareiss_det(m), BigInt(-1));
  EXPECT_EQ(naive_det(m), BigInt(-1));
  EXPECT_EQ(bareiss_det(IntMatrix{{1, 2}, {2, 4}}), BigInt(0));
}

TEST(Determinant, NaiveOracleRefusesLargeOrders) {
  EXPECT_THROW(naive_det(IntMatrix(kNaiveDetMaxOrder + 1)), SizeLimitError);
}

TEST(HankelMatrix, Layout) {
  const auto s = raw_series(ints({1, 2, 3, 4, 5, 6}));
  const IntMatrix h = hankel_matrix(s, {3, 1});
  EXPECT_EQ(h(0, 0), 2);
  EXPECT_EQ(h(1, 2), 5);
  EXPECT_EQ(h(2, 2), 6);
  EXPECT_EQ((HankelSpec{3, 1}.last_index()), 5u);
}

TEST(HankelMatrix, ReportsMissingCoefficients) {
  const auto s = raw_series(ints({1, 2, 3, 4}));
  try {
    hankel_matrix(s, {3, 0});
    FAIL() << "expected InsufficientCoefficients";
  } catch (const InsufficientCoefficients& e) {
    EXPECT_EQ(e.needed_index(), 4u);
    EXPECT_EQ(e.available(), 4u);
  }
  EXPECT_THROW(hankel_sequence(s, 3), InsufficientCoefficients);
}

TEST(HankelSequence, CatalanDeterminantsAreOne) {
  const auto c = dyck_count_dp(AvoidingSet(2, {}), 40);
  for (const auto& h : hankel_sequence(c, 21)) EXPECT_EQ(h, 1);
  for (const auto& h : hankel_sequence(c, 20, 1)) EXPECT_EQ(h, 1);
  // Shift two gives n + 2 for Catalan numbers.
  const auto shifted = hankel_sequence(c, 15, 2);
  for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(shifted[n - 1], BigInt(n + 1));
}

TEST(HankelSequence, PrintedPrefixes) {
  const auto five_two = dyck_count_dp(AvoidingSet(5, {2}), 32);
  EXPECT_EQ(hankel_sequence(five_two, 17),
            ints({1, 0, -1, -2, -2, -3, -4, -5, -1, 7, 23, 31, 51, 116, 149, 118, -426}));
  const auto seven_two = dyck_count_dp(AvoidingSet(7, {2}), 32);
  EXPECT_EQ(hankel_sequence(seven_two, 17),
            ints({1, 0, -1, -2, -3, -3, -4, -8, -9, -10, -4, 26, 53, 104, 212, 323, 671}));
  const auto six = dyck_count_dp(AvoidingSet(6, {1, 2}), 32);
  EXPECT_EQ(hankel_sequence(six, 17), ints({1, 0, -1, -2, 0, 2, 5, 8, 11, 3, 3, -17, -260, -452,
                                            -839, -1752, 5288}));
}

TEST(HankelSequence, OracleFrozenPrefix) {
  // Cofactor expansion on enumerated path counts.
  const auto d = dyck_count_dp(AvoidingSet(4, {1, 2}), 12);
  EXPECT_EQ(hankel_sequence(d, 7), ints({1, 0, -1, 0, 1, 1, 1}));
}

TEST(HankelSequence, MethodsAgreeOnSingularRuns) {
  // Long zero runs force the block look-ahead.
  const auto d = dyck_count_dp(AvoidingSet(9, {1, 2, 3, 4, 5, 6, 7, 8}), 80);
  EXPECT_EQ(hankel_sequence(d, 40),
            hankel_sequence(d, 40, 0, HankelMethod::kIndependent));
}

TEST(LeadingMinors, AllZeroMatrix) {
  const auto minors = leading_minors(IntMatrix(4));
  EXPECT_EQ(minors, ints({0, 0, 0, 0}));
}

TEST(DeterminantProperty, EliminationMatchesCofactorExpansion) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto order = static_cast<std::size_t>(gen.uniform(1, 6));
    const IntMatrix m = trial % 3 == 0 ? gen.sparse_matrix(order) : gen.matrix(order, 9);
    EXPECT_EQ(bareiss_det(m), naive_det(m));
  }
}

TEST(DeterminantProperty, SweepMatchesPerOrderDeterminants) {
  testing::Gen gen(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto order = static_cast<std::size_t>(gen.uniform(1, 8));
    const IntMatrix m = trial % 2 == 0 ? gen.sparse_matrix(order) : gen.matrix(order, 3);
    const auto minors = leading_minors(m);
    for (std::size_t j = 1; j <= order; ++j) {
      EXPECT_EQ(minors[j - 1], bareiss_det(m.leading(j))) << "trial " << trial << " j " << j;
    }
  }
}

TEST(DeterminantProperty, SweepMatchesIndependentOnPathSeries) {
  testing::Gen gen(43);
  for (int trial = 0; trial < 40; ++trial) {
    const AvoidingSet set = gen.set_in(2, 8);
    const auto d = dyck_count_dp(set, 60);
    const std::size_t shift = static_cast<std::size_t>(gen.uniform(0, 2));
    EXPECT_EQ(hankel_sequence(d, 25, shift),
              hankel_sequence(d, 25, shift, HankelMethod::kIndependent))
        << set.literal() << " shift " << shift;
  }
}

}  // namespace
}  // namespace hankel_lab
