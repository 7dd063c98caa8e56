#include <gtest/gtest.h>

#include "gtlab/bounds.h"
#include "gtlab/symmetric.h"

using namespace gtlab;

TEST(Zc, EightGoods) {
  Instance in(8, {});
  ZcRun z = run_zc_detailed(in);
  finalize(z.result, in);
  EXPECT_EQ(z.result.tests_used, 4U);
  EXPECT_EQ(z.plan.n1, 2U);
  EXPECT_EQ(z.plan.nR1, 0U);
  EXPECT_EQ(z.plan.alpha1, 0U);
}

TEST(Zc, FourDefectives) {
  Instance in(4, {0, 1, 2, 3});
  ZcRun z = run_zc_detailed(in);
  finalize(z.result, in);
  EXPECT_EQ(z.plan.n1, 1U);
  EXPECT_EQ(z.plan.alpha1, 4U);
  EXPECT_EQ(z.plan.branch, ZcBranch::kZu);
  EXPECT_EQ(z.result.tests_used, 8U);
  EXPECT_LE(static_cast<double>(z.result.tests_used), zc_upper_n(4).value);
}

TEST(Zc, ThreeItemsIndividually) {
  Instance in(3, {1});
  ZcRun z = run_zc_detailed(in);
  finalize(z.result, in);
  EXPECT_EQ(z.plan.n1, 0U);
  EXPECT_EQ(z.result.tests_used, 3U);
}

TEST(Zc, NoDefectivesAtMostSeven) {
  for (std::size_t n = 1; n <= 300; ++n) {
    Instance in(n, {});
    RunResult r = run_zc(in);
    finalize(r, in);
    ASSERT_LE(r.tests_used, 7U) << "n=" << n;
  }
}

TEST(Zc, SecondRoundOnTwoContaminatedGroups) {
  // groups of 4: items 0 and 4 hit groups 0 and 1
  Instance in(16, {0, 4});
  ZcRun z = run_zc_detailed(in);
  finalize(z.result, in);
  EXPECT_EQ(z.plan.alpha1, 2U);
  ASSERT_TRUE(z.plan.n2.has_value());
  EXPECT_EQ(*z.plan.n2, 2U);
  EXPECT_TRUE(zc_quarter_condition(z.plan));
}

TEST(Zc, EveryMaskCorrectUpTo12) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Instance in = Instance::from_mask(n, mask);
      ZcRun z = run_zc_detailed(in);
      ASSERT_NO_THROW(finalize(z.result, in)) << "n=" << n << " mask=" << mask;
      ASSERT_TRUE(zc_quarter_condition(z.plan));
    }
  }
}
