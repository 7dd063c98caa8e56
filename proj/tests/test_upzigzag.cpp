#include <gtest/gtest.h>

#include "gtlab/harness.h"
#include "gtlab/upzigzag.h"

using namespace gtlab;

namespace {

std::size_t driver(TestSession& s, std::vector<Item> pool, unsigned k) {
  TestTag tag;
  tag.stage = Stage::kZu;
  tag.rank = k;
  return s.test(pool, tag);
}

}  // namespace

TEST(TwoTest, ZeroOne) {
  TestSession s(Instance(2, {1}));
  UpZigZagState st;
  st.k = 1;
  st.p_c = 2;
  std::vector<Item> pool{0, 1};
  std::size_t seq = driver(s, pool, 1);
  two_test(s, pool, seq, st);
  EXPECT_EQ(s.tests_used(), 3U);
  EXPECT_EQ(st.k, 2U);
  EXPECT_EQ(st.p_c, 3U);
  EXPECT_TRUE(st.delta_ts);
  EXPECT_EQ(s.transcript().records[seq].status, Outcome::kPure);
  EXPECT_EQ(s.transcript().records[seq].raw_outcome, Outcome::kContaminated);
}

TEST(TwoTest, OneOne) {
  TestSession s(Instance(2, {0, 1}));
  UpZigZagState st;
  st.k = 1;
  st.p_c = 2;
  std::vector<Item> pool{0, 1};
  std::size_t seq = driver(s, pool, 1);
  two_test(s, pool, seq, st);
  EXPECT_EQ(s.tests_used(), 3U);
  EXPECT_EQ(st.k, 0U);
  EXPECT_EQ(st.p_c, 0U);
  EXPECT_FALSE(st.delta_ts);
  EXPECT_EQ(s.transcript().records[seq].status, Outcome::kContaminated);
}

TEST(TwoTest, SingleItemPool) {
  TestSession s(Instance(1, {0}));
  UpZigZagState st;
  st.k = 1;
  std::vector<Item> pool{0};
  std::size_t seq = driver(s, pool, 1);
  two_test(s, pool, seq, st);
  EXPECT_EQ(s.tests_used(), 1U);
  EXPECT_TRUE(s.identified(0));
}

TEST(ThreeTest, Patterns) {
  for (auto defs : {std::vector<Item>{1, 2}, std::vector<Item>{0, 1, 2}, std::vector<Item>{2}}) {
    TestSession s(Instance(3, defs));
    UpZigZagState st;
    st.k = 2;
    st.delta_ts = true;
    std::vector<Item> pool{0, 1, 2};
    std::size_t seq = driver(s, pool, 2);
    three_test(s, pool, seq, st);
    EXPECT_EQ(s.tests_used(), 4U);
    EXPECT_EQ(st.k, 1U);
    EXPECT_EQ(st.p_c, 0U);
    EXPECT_FALSE(st.delta_ts);
  }
}

TEST(ThreeTest, Preconditions) {
  TestSession s(Instance(3, {0}));
  UpZigZagState st;
  st.k = 2;
  std::vector<Item> pool{0, 1, 2};
  EXPECT_THROW(three_test(s, pool, 0, st), PreconditionError);
}

TEST(Zu, SingleDefective) {
  Instance in(1, {0});
  RunResult r = run_zu(in);
  finalize(r, in);
  EXPECT_EQ(r.tests_used, 1U);
}

TEST(Zu, ThreeGoods) {
  Instance in(3, {});
  RunResult r = run_zu(in);
  finalize(r, in);
  EXPECT_EQ(r.tests_used, 2U);
}

TEST(Zu, SevenGoods) {
  Instance in(7, {});
  RunResult r = run_zu(in);
  finalize(r, in);
  ASSERT_EQ(r.tests_used, 4U);
  std::vector<std::size_t> sizes;
  for (const auto& rec : r.transcript.records) sizes.push_back(rec.pool.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3, 1}));
}

TEST(Zu, AdditionalTestAfterSixPure) {
  Instance in(200, {});
  RunResult r = run_zu(in);
  finalize(r, in);
  ASSERT_EQ(r.tests_used, 7U);
  EXPECT_EQ(r.transcript.records.back().kind, TestKind::kAdditional);
  EXPECT_EQ(r.transcript.records.back().pool.size(), 200U - 1 - 2 - 3 - 6 - 12 - 24);
}

TEST(Zu, WorstCaseTable) {
  // exhaustive worst case over all d for n = 1..12
  const std::size_t expected[] = {1, 2, 4, 5, 7, 8, 9, 11, 12, 14, 15, 16};
  for (std::size_t n = 1; n <= 12; ++n) {
    std::size_t worst = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Instance in = Instance::from_mask(n, mask);
      RunResult r = run_zu(in);
      ASSERT_NO_THROW(finalize(r, in));
      worst = std::max(worst, r.tests_used);
    }
    EXPECT_EQ(worst, expected[n - 1]) << "n=" << n;
    EXPECT_LE(10 * worst, 14 * n);
  }
}

TEST(Zu, PhaseEndPolicyIsAvailable) {
  RunOptions opt;
  opt.delta_policy = DeltaFlagPolicy::kAtPhaseEnd;
  for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
    Instance in = Instance::from_mask(10, mask);
    RunResult r = run_zu(in, opt);
    ASSERT_NO_THROW(finalize(r, in));
  }
}
