#include <gtest/gtest.h>

#include "gtlab/bounds.h"
#include "gtlab/core.h"
#include "gtlab/minimax.h"

using namespace gtlab;

TEST(Minimax, SmallValues) {
  EXPECT_EQ(minimax_m(2, 1), 1U);
  EXPECT_EQ(minimax_m(8, 1), 3U);
  EXPECT_EQ(minimax_m(4, 2), 3U);
  EXPECT_EQ(minimax_m(5, 0), 0U);
  EXPECT_EQ(minimax_m(5, 5), 0U);
}

TEST(Minimax, SingleDefectiveIsBinarySearch) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(minimax_m(n, 1), info_lower_bound(n, 1)) << "n=" << n;
  }
}

TEST(Minimax, DenseCellsMatchClosedForm) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      if (auto v = lemma7_exact(n, d)) EXPECT_EQ(minimax_m(n, d), *v) << n << "," << d;
    }
  }
}

TEST(Minimax, BetweenInfoAndHwang) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t d = 0; d <= n; ++d) {
      std::uint64_t m = minimax_m(n, d);
      EXPECT_GE(m, info_lower_bound(n, d));
      BoundReport h = hwang_upper(n, d);
      if (h.applicable) EXPECT_LE(static_cast<double>(m), h.value);
    }
  }
}

TEST(Minimax, Refusals) {
  EXPECT_THROW(minimax_m(9, 1), RefusalError);
}

TEST(Minimax, CandidateLimitIsInclusive) {
  MinimaxLimits wide;
  wide.max_candidates = 70;
  MinimaxStats stats;
  EXPECT_NO_THROW(minimax_m(8, 4, wide, &stats));
  EXPECT_GT(stats.states, 0U);
  MinimaxLimits tight;
  tight.max_candidates = 69;
  EXPECT_THROW(minimax_m(8, 4, tight), RefusalError);
  EXPECT_THROW(minimax_m(3, 4), UsageError);
}

TEST(CanonicalKey, InvariantUnderRelabeling) {
  Family f{0b0011, 0b0101};
  Family g{0b1100, 0b1010};  // items reversed
  EXPECT_EQ(canonical_key(f, 4), canonical_key(g, 4));
  Family h{0b0011, 0b1100};
  EXPECT_NE(canonical_key(f, 4), canonical_key(h, 4));
}
