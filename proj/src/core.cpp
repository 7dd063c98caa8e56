#include "gtlab/core.h"

#include <algorithm>
#include <string>

namespace gtlab {

const char* to_string(Outcome o) { return o == Outcome::kPure ? "pure" : "contaminated"; }

const char* to_string(Label l) { return l == Label::kGood ? "good" : "defective"; }

const char* to_string(TestKind k) {
  switch (k) {
    case TestKind::kDriver: return "driver";
    case TestKind::kAdditional: return "additional";
    case TestKind::kIncurred: return "incurred";
  }
  return "?";
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::kStandalone: return "standalone";
    case Stage::kRound: return "round";
    case Stage::kZd: return "zd";
    case Stage::kZu: return "zu";
  }
  return "?";
}

const char* to_string(SubTest s) {
  switch (s) {
    case SubTest::kNone: return "none";
    case SubTest::kPartY: return "Y";
    case SubTest::kPartZ: return "Z";
    case SubTest::kPartU: return "U";
    case SubTest::kPartV: return "V";
    case SubTest::kHalving: return "halving";
    case SubTest::kIndividual: return "individual";
  }
  return "?";
}

const char* to_string(Resolver r) {
  switch (r) {
    case Resolver::kNone: return "none";
    case Resolver::kSingleton: return "singleton";
    case Resolver::kTwoTest: return "2-test";
    case Resolver::kThreeTest: return "3-test";
    case Resolver::kFourSplit: return "4-split";
  }
  return "?";
}

Instance::Instance(std::size_t n, std::vector<Item> defectives)
    : defectives_(std::move(defectives)), membership_(n, 0) {
  std::sort(defectives_.begin(), defectives_.end());
  for (std::size_t i = 0; i < defectives_.size(); ++i) {
    Item d = defectives_[i];
    if (d >= n) {
      throw UsageError("defective index " + std::to_string(d) + " out of range for n=" +
                       std::to_string(n));
    }
    if (i > 0 && defectives_[i - 1] == d) {
      throw UsageError("defective index " + std::to_string(d) + " listed twice");
    }
    membership_[d] = 1;
  }
}

Instance Instance::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw UsageError("from_mask supports n <= 64");
  if (n < 64 && (mask >> n) != 0) throw UsageError("mask has bits beyond n");
  std::vector<Item> defs;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) defs.push_back(static_cast<Item>(i));
  }
  return Instance(n, std::move(defs));
}

Outcome PoolOracle::contaminated(std::span<const Item> pool) {
  if (pool.empty()) throw UsageError("empty pool");
  bool hit = false;
  for (Item i : pool) {
    if (i >= instance_.size()) {
      throw UsageError("pool index " + std::to_string(i) + " out of range");
    }
    hit = hit || instance_.is_defective(i);
  }
  ++query_count_;
  return hit ? Outcome::kContaminated : Outcome::kPure;
}

TestSession::TestSession(Instance instance)
    : oracle_(std::move(instance)), identified_(oracle_.instance().size(), 0) {}

std::size_t TestSession::test(std::span<const Item> pool, const TestTag& tag) {
  Outcome o = oracle_.contaminated(pool);
  TestRecord rec;
  rec.seq = transcript_.records.size();
  rec.pool.assign(pool.begin(), pool.end());
  rec.raw_outcome = o;
  rec.kind = tag.kind;
  rec.rank = tag.rank;
  rec.parent = tag.parent;
  rec.status = o;
  rec.stage = tag.stage;
  rec.sub = tag.sub;
  transcript_.records.push_back(std::move(rec));
  return transcript_.records.size() - 1;
}

void TestSession::identify(Item item, Label label, std::optional<std::size_t> attributed_to,
                           bool via_test) {
  if (identified_.at(item) != 0) {
    throw CorrectnessError("item " + std::to_string(item) + " identified twice", item);
  }
  identified_[item] = 1;
  transcript_.identifications.push_back({item, label, attributed_to, via_test});
}

void TestSession::prune(std::vector<Item>& items) const {
  std::erase_if(items, [this](Item i) { return identified_[i] != 0; });
}

Transcript TestSession::release() && { return std::move(transcript_); }

RunResult make_result(std::string algorithm, TestSession&& session) {
  RunResult run;
  run.algorithm = std::move(algorithm);
  run.tests_used = session.tests_used();
  run.classified.assign(session.instance().size(), std::nullopt);
  run.transcript = std::move(session).release();
  for (const auto& id : run.transcript.identifications) run.classified[id.item] = id.label;
  return run;
}

void finalize(const RunResult& run, const Instance& instance) {
  if (run.tests_used != run.transcript.records.size()) {
    throw AccountingError("tests_used=" + std::to_string(run.tests_used) +
                          " but transcript has " +
                          std::to_string(run.transcript.records.size()) + " records");
  }
  if (run.classified.size() != instance.size()) {
    throw AccountingError("classification covers " + std::to_string(run.classified.size()) +
                          " items, instance has " + std::to_string(instance.size()));
  }
  if (run.transcript.identifications.size() != instance.size()) {
    throw AccountingError(std::to_string(run.transcript.identifications.size()) +
                          " identifications for " + std::to_string(instance.size()) +
                          " items");
  }
  for (std::size_t i = 0; i < run.transcript.records.size(); ++i) {
    const TestRecord& r = run.transcript.records[i];
    if (r.seq != i) throw AccountingError("record seq out of order at " + std::to_string(i));
    if (r.kind == TestKind::kIncurred &&
        (!r.parent || *r.parent >= r.seq ||
         run.transcript.records[*r.parent].kind != TestKind::kDriver)) {
      throw AccountingError("incurred record " + std::to_string(i) +
                            " lacks an earlier driver parent");
    }
    if (r.kind == TestKind::kAdditional && r.rank) {
      throw AccountingError("additional record " + std::to_string(i) + " carries a rank");
    }
  }
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& got = run.classified[i];
    Label want = instance.is_defective(static_cast<Item>(i)) ? Label::kDefective : Label::kGood;
    if (!got) {
      throw CorrectnessError("item " + std::to_string(i) + " was never identified",
                             static_cast<Item>(i));
    }
    if (*got != want) {
      throw CorrectnessError("item " + std::to_string(i) + " classified " + to_string(*got) +
                                 " but is " + to_string(want),
                             static_cast<Item>(i));
    }
  }
}

}  // namespace gtlab
