#include <gtest/gtest.h>

#include "gtlab/harness.h"
#include "gtlab/zigzag.h"

using namespace gtlab;

TEST(ZdInitialK, LeastK) {
  EXPECT_EQ(zd_initial_k(0), 0U);
  EXPECT_EQ(zd_initial_k(1), 1U);
  EXPECT_EQ(zd_initial_k(2), 2U);
  EXPECT_EQ(zd_initial_k(3), 2U);
  EXPECT_EQ(zd_initial_k(4), 3U);
  EXPECT_EQ(zd_initial_k(1024), 11U);
}

TEST(Zd, AllGoodFourItems) {
  Instance in(4, {});
  RunResult r = run_zd(in);
  finalize(r, in);
  EXPECT_EQ(r.tests_used, 1U);
  EXPECT_EQ(r.transcript.records[0].pool.size(), 4U);
}

TEST(Zd, SingleDefectiveItem) {
  Instance in(1, {0});
  RunResult r = run_zd(in);
  finalize(r, in);
  EXPECT_EQ(r.tests_used, 1U);
}

TEST(Zd, TwoItemsSecondDefective) {
  Instance in(2, {1});
  RunResult r = run_zd(in);
  finalize(r, in);
  EXPECT_EQ(r.tests_used, 2U);
  EXPECT_EQ(r.transcript.records[1].pool, (std::vector<Item>{0}));
}

TEST(Zd, EveryMaskCorrectUpTo12) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Instance in = Instance::from_mask(n, mask);
      RunResult r = run_zd(in);
      ASSERT_NO_THROW(finalize(r, in)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Zd, DriverRanksAndResolvers) {
  Instance in(20, {3, 17});
  RunResult r = run_zd(in);
  finalize(r, in);
  for (const TestRecord& rec : r.transcript.records) {
    if (rec.kind != TestKind::kDriver) {
      ASSERT_TRUE(rec.parent.has_value());
      continue;
    }
    ASSERT_TRUE(rec.rank.has_value());
    EXPECT_LE(rec.pool.size(), a_seq(*rec.rank));
    if (rec.raw_outcome == Outcome::kContaminated) {
      EXPECT_NE(rec.resolver, Resolver::kNone);
    }
  }
}
