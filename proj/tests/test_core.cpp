#include <gtest/gtest.h>

#include "gtlab/core.h"
#include "gtlab/symmetric.h"

using namespace gtlab;

TEST(Oracle, PoolOutcomes) {
  PoolOracle o(Instance(4, {2}));
  std::vector<Item> a{0, 1}, b{1, 2};
  EXPECT_EQ(o.contaminated(a), Outcome::kPure);
  EXPECT_EQ(o.contaminated(b), Outcome::kContaminated);
  EXPECT_EQ(o.query_count(), 2U);

  PoolOracle none(Instance(1, {}));
  std::vector<Item> c{0};
  EXPECT_EQ(none.contaminated(c), Outcome::kPure);
}

TEST(Oracle, RejectsBadPools) {
  PoolOracle o(Instance(4, {2}));
  std::vector<Item> empty, out_of_range{4};
  EXPECT_THROW(o.contaminated(empty), UsageError);
  EXPECT_THROW(o.contaminated(out_of_range), UsageError);
}

TEST(Instance, Validation) {
  EXPECT_THROW(Instance(3, {3}), UsageError);
  EXPECT_THROW(Instance(3, {1, 1}), UsageError);
  Instance m = Instance::from_mask(5, 0b10010);
  EXPECT_EQ(m.defectives(), (std::vector<Item>{1, 4}));
  EXPECT_TRUE(m.is_defective(4));
  EXPECT_FALSE(m.is_defective(0));
}

TEST(Session, DoubleIdentificationThrows) {
  TestSession s(Instance(2, {0}));
  s.identify(1, Label::kGood, std::nullopt, false);
  EXPECT_THROW(s.identify(1, Label::kGood, std::nullopt, false), CorrectnessError);
}

TEST(Finalize, ZcRunIsCorrect) {
  Instance in(8, {3});
  RunResult r = run_zc(in);
  EXPECT_NO_THROW(finalize(r, in));
}

TEST(Finalize, FlippedLabelIsReported) {
  Instance in(8, {3});
  RunResult r = run_zc(in);
  r.classified[5] = Label::kDefective;
  try {
    finalize(r, in);
    FAIL() << "expected a correctness error";
  } catch (const CorrectnessError& e) {
    ASSERT_TRUE(e.item().has_value());
    EXPECT_EQ(*e.item(), 5U);
  }
}

TEST(Finalize, UnbalancedCountIsReported) {
  Instance in(8, {3});
  RunResult r = run_zc(in);
  r.tests_used += 1;
  EXPECT_THROW(finalize(r, in), AccountingError);
}
