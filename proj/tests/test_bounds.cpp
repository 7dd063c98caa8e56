#include <gtest/gtest.h>

#include <cmath>

#include "gtlab/core.h"

#include "gtlab/bounds.h"

using namespace gtlab;

TEST(InfoLower, Values) {
  EXPECT_EQ(info_lower_bound(4, 2), 3U);
  EXPECT_EQ(info_lower_bound(9, 0), 0U);
  EXPECT_EQ(info_lower_bound(8, 1), 3U);
  EXPECT_EQ(info_lower_bound(1000, 500), static_cast<std::uint64_t>(std::ceil(log2_binomial(1000, 500))));
}

TEST(Eq1, BelowInfoAndDomain) {
  BoundReport b = eq1_lower_bound(100, 10);
  ASSERT_TRUE(b.applicable);
  EXPECT_LE(b.value, static_cast<double>(info_lower_bound(100, 10)));
  EXPECT_FALSE(eq1_lower_bound(10, 5).applicable);
  BoundReport big = eq1_lower_bound(1024, 1);
  ASSERT_TRUE(big.applicable);
  EXPECT_NEAR(big.value, 10 + std::log2(std::exp(1.0) / std::sqrt(2.0)) + 0.5 - 1.567, 1e-9);
}

TEST(RatioLower, Values) {
  BoundReport b = lemma8_lower_bound(100, 10);
  ASSERT_TRUE(b.applicable);
  EXPECT_NEAR(b.value, 43.74, 0.005);
  BoundReport small = lemma8_lower_bound(2, 1);
  ASSERT_TRUE(small.applicable);
  EXPECT_NEAR(small.value, 0.5, 1e-12);
}

TEST(RatioLower, RatioTermAboveConstant) {
  for (double r = 21.0 / 8 + 1e-6; r < 1e6; r *= 1.01) {
    ASSERT_GT(lemma8_ratio_term(r), 1.1243) << "r=" << r;
  }
}

TEST(DenseExact, Domain) {
  EXPECT_EQ(lemma7_exact(4, 2), 3U);
  EXPECT_FALSE(lemma7_exact(21, 7).has_value());
  EXPECT_EQ(lemma7_exact(21, 8), 20U);
  EXPECT_FALSE(lemma7_exact(5, 5).has_value());
}

TEST(BestLower, TakesMax) {
  EXPECT_EQ(best_lower_bound(4, 2), 3.0);
  EXPECT_EQ(best_lower_bound(8, 1), 3.0);
  EXPECT_GE(best_lower_bound(100, 10), lemma8_lower_bound(100, 10).value);
  EXPECT_THROW(best_lower_bound(5, 5), UsageError);
}

TEST(Upper, Values) {
  EXPECT_NEAR(zd_upper(1024, 1).value, 10 + (5 - std::log2(5.0)) + 4, 1e-9);
  EXPECT_NEAR(zd_upper(1024, 1).value, 16.68, 0.005);
  EXPECT_EQ(zu_upper_n(10).value, 14.0);
  EXPECT_EQ(hwang_upper(8, 2).value, 6.0);
  EXPECT_FALSE(zu_upper_d(10, 2).applicable);
  EXPECT_TRUE(zu_upper_d(10, 3).applicable);
  EXPECT_NEAR(zc_upper_n(10).value, 27.0, 1e-12);
}

TEST(ZcComponents, Components) {
  Theorem2Verdict zero = theorem2_check(50, 0, 4);
  EXPECT_TRUE(zero.applicable);
  EXPECT_EQ(zero.component, 'a');
  EXPECT_TRUE(zero.pass);
  EXPECT_FALSE(theorem2_check(50, 0, 8).pass);

  Theorem2Verdict dense = theorem2_check(8, 4, 25);
  EXPECT_EQ(dense.component, 'b');
  EXPECT_NEAR(dense.limit, 1.431 * 7 + 15, 1e-12);
  EXPECT_TRUE(dense.pass);
  EXPECT_FALSE(theorem2_check(8, 4, 26).pass);

  EXPECT_FALSE(theorem2_check(8, 8, 3).applicable);
  EXPECT_EQ(theorem2_check(100, 10, 1).component, 'c');
}

TEST(SplitEntropy, Examples) {
  EXPECT_TRUE(lemma3_check(4, 1, 4, 1));
  EXPECT_TRUE(lemma3_check(2, 1, 6, 1));
  EXPECT_TRUE(lemma3_check(1, 1, 1, 1));
  EXPECT_THROW(lemma3_check(1, 2, 1, 1), UsageError);
}

TEST(Within, Slack) {
  EXPECT_TRUE(within(1.0 + 1e-12, 1.0));
  EXPECT_FALSE(within(1.0 + 1e-6, 1.0));
}

TEST(AllBounds, Order) {
  auto all = all_bounds(100, 10);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front().name, "info");
  bool saw = false;
  for (const auto& b : all) saw = saw || (b.name == "lemma8" && std::abs(b.value - 43.74) < 0.005);
  EXPECT_TRUE(saw);
}
