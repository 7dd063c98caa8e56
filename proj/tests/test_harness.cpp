#include <gtest/gtest.h>

#include "gtlab/harness.h"
#include "gtlab/json_io.h"

using namespace gtlab;

namespace {

std::size_t off_by_one(unsigned i) { return i >= 2 ? a_seq(i) - 1 : a_seq(i); }

}  // namespace

TEST(Algorithm, Parse) {
  EXPECT_EQ(parse_algorithm("zc"), Algorithm::kZc);
  EXPECT_STREQ(to_string(Algorithm::kIndividual), "individual");
  EXPECT_THROW(parse_algorithm("zz"), UsageError);
}

TEST(WorstCase, ZuAllGoodTen) {
  WorstCaseCell c = worst_case(Algorithm::kZu, 10, 0);
  EXPECT_EQ(c.runs, 1U);
  EXPECT_LE(c.worst_tests, 14U);
  EXPECT_TRUE(c.ok());
}

TEST(WorstCase, IndividualAlwaysN) {
  for (std::size_t d = 0; d <= 6; ++d) {
    EXPECT_EQ(worst_case(Algorithm::kIndividual, 6, d).worst_tests, 6U);
  }
}

TEST(WorstCase, ZcAllDefectiveSkipsComponentCheck) {
  WorstCaseCell c = worst_case(Algorithm::kZc, 8, 8);
  EXPECT_EQ(c.runs, 1U);
  for (const BoundCheck& b : c.bounds) EXPECT_EQ(b.name.rfind("theorem2", 0), std::string::npos);
  EXPECT_TRUE(c.ok());
}

TEST(WorstCase, ArgmaxIsFirstInEnumerationOrder) {
  WorstCaseOptions one;
  one.workers = 1;
  WorstCaseOptions three;
  three.workers = 3;
  WorstCaseCell a = worst_case(Algorithm::kZu, 12, 4, one);
  WorstCaseCell b = worst_case(Algorithm::kZu, 12, 4, three);
  EXPECT_EQ(a.worst_tests, b.worst_tests);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(WorstCase, Refusals) {
  EXPECT_THROW(worst_case(Algorithm::kZu, 3, 4), UsageError);
  WorstCaseOptions small;
  small.cap = 100;
  EXPECT_THROW(worst_case(Algorithm::kZu, 20, 10, small), UsageError);
}

TEST(WorstCase, SampledIsLabelledAndSeeded) {
  WorstCaseOptions s;
  s.exhaustive = false;
  s.samples = 200;
  s.seed = 7;
  WorstCaseCell a = worst_case(Algorithm::kZc, 40, 5, s);
  WorstCaseCell b = worst_case(Algorithm::kZc, 40, 5, s);
  EXPECT_EQ(a.runs, 200U);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(to_json(a)["estimate"], "lower");
  for (const BoundCheck& c : a.bounds) EXPECT_FALSE(c.asserted);
}

TEST(Grid, CleanUpToTwelve) {
  GridReport r = verify_grid(12, all_algorithms());
  EXPECT_TRUE(r.ok()) << r.violation_count();
  EXPECT_THROW(verify_grid(21, {Algorithm::kZu}), UsageError);
}

TEST(Grid, OffByOneScheduleIsCaught) {
  WorstCaseOptions opt;
  opt.run.schedule = &off_by_one;
  GridReport r = verify_grid(12, {Algorithm::kZu}, opt);
  EXPECT_FALSE(r.ok());
  std::size_t over_budget = 0;
  for (const WorstCaseCell& c : r.cells) {
    for (const BoundCheck& b : c.bounds) over_budget += (b.name == "lemma5_zu_1.4n" && !b.pass) ? 1 : 0;
  }
  EXPECT_GT(over_budget, 0U);
}

TEST(Report, ByteIdentical) {
  GridReport a = verify_grid(8, all_algorithms());
  GridReport b = verify_grid(8, all_algorithms());
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_EQ(to_csv(a), to_csv(b));
}

TEST(Report, CsvHeader) {
  WorstCaseCell c = worst_case(Algorithm::kZd, 5, 2);
  std::string csv = to_csv(c);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "algorithm,n,d,worst_tests,bound_name,bound_value,pass");
  EXPECT_NE(csv.find("zd,5,2,"), std::string::npos);
}

TEST(Report, CounterexampleShape) {
  Violation v;
  v.check = "lemma5_zu_1.4n";
  v.algorithm = Algorithm::kZu;
  v.n = 6;
  v.defectives = {1, 4};
  auto j = counterexample(v);
  EXPECT_TRUE(j.contains("instance"));
  EXPECT_TRUE(j.contains("transcript"));
  EXPECT_EQ(j["failed_check"], "lemma5_zu_1.4n");
  EXPECT_TRUE(j.contains("values"));
  EXPECT_EQ(j["instance"]["defectives"].size(), 2U);
}
