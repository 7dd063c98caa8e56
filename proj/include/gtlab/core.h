#pragma once

// Ground-truth instances, the pool oracle, and transcript recording shared by
// every group-testing procedure in the library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtlab {

using Item = std::uint32_t;

enum class Outcome : std::uint8_t { kPure, kContaminated };
enum class Label : std::uint8_t { kGood, kDefective };

// Driver tests are the pool tests a procedure issues from its main loop;
// incurred tests are sub-tests (splitting, individual checks) spawned by a
// contaminated driver; additional tests are the whole-remainder probes of Z^u.
enum class TestKind : std::uint8_t { kDriver, kAdditional, kIncurred };

// Which procedure issued a record. Z^c runs mix round tests with a Z^d or Z^u
// sub-run; the analyzer works on the kZu slice only.
enum class Stage : std::uint8_t { kStandalone, kRound, kZd, kZu };

// Role of a sub-test inside a split procedure.
enum class SubTest : std::uint8_t {
  kNone,
  kPartY,
  kPartZ,
  kPartU,
  kPartV,
  kHalving,
  kIndividual,
};

// How a contaminated driver was resolved.
enum class Resolver : std::uint8_t {
  kNone,
  kSingleton,  // pool of one item, the driver test itself decides
  kTwoTest,
  kThreeTest,
  kFourSplit,
};

const char* to_string(Outcome o);
const char* to_string(Label l);
const char* to_string(TestKind k);
const char* to_string(Stage s);
const char* to_string(SubTest s);
const char* to_string(Resolver r);

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CorrectnessError : public std::runtime_error {
 public:
  CorrectnessError(const std::string& what, std::optional<Item> item)
      : std::runtime_error(what), item_(item) {}
  std::optional<Item> item() const { return item_; }

 private:
  std::optional<Item> item_;
};

class AccountingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Instance {
 public:
  // Throws UsageError when a defective index is >= n or repeated.
  Instance(std::size_t n, std::vector<Item> defectives);

  // Bit i of mask set <=> item i defective. Requires n <= 64.
  static Instance from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return membership_.size(); }
  std::size_t defective_count() const { return defectives_.size(); }
  const std::vector<Item>& defectives() const { return defectives_; }
  bool is_defective(Item i) const { return membership_.at(i) != 0; }

 private:
  std::vector<Item> defectives_;  // sorted
  std::vector<std::uint8_t> membership_;
};

class PoolOracle {
 public:
  explicit PoolOracle(Instance instance) : instance_(std::move(instance)) {}

  // One query. Throws UsageError for an empty pool or an out-of-range index.
  Outcome contaminated(std::span<const Item> pool);

  std::size_t query_count() const { return query_count_; }
  const Instance& instance() const { return instance_; }

 private:
  Instance instance_;
  std::size_t query_count_ = 0;
};

struct TestRecord {
  std::size_t seq = 0;
  std::vector<Item> pool;
  Outcome raw_outcome = Outcome::kPure;
  TestKind kind = TestKind::kDriver;
  std::optional<unsigned> rank;
  std::optional<std::size_t> parent;
  // Status after the 2-Test reinterpretation; equals raw_outcome elsewhere.
  Outcome status = Outcome::kPure;
  Stage stage = Stage::kStandalone;
  SubTest sub = SubTest::kNone;
  // On a driver resolved by 4-Split partitioning: 0..3 for Y, Z, U, V.
  std::optional<unsigned> split_part;
  Resolver resolver = Resolver::kNone;
};

struct Identification {
  Item item = 0;
  Label label = Label::kGood;
  std::optional<std::size_t> attributed_to;
  bool via_test = true;
};

struct Transcript {
  std::vector<TestRecord> records;
  std::vector<Identification> identifications;
};

struct TestTag {
  TestKind kind = TestKind::kDriver;
  Stage stage = Stage::kStandalone;
  std::optional<unsigned> rank;
  std::optional<std::size_t> parent;
  SubTest sub = SubTest::kNone;
};

// Oracle plus transcript. Every procedure in the library runs against one
// session; a session is single-run state and is never shared.
class TestSession {
 public:
  explicit TestSession(Instance instance);

  // Queries the oracle on pool and appends a record. Returns its seq.
  std::size_t test(std::span<const Item> pool, const TestTag& tag);

  Outcome outcome(std::size_t seq) const { return transcript_.records.at(seq).raw_outcome; }
  void set_status(std::size_t seq, Outcome status) {
    transcript_.records.at(seq).status = status;
  }
  void set_split_part(std::size_t seq, unsigned part) {
    transcript_.records.at(seq).split_part = part;
  }
  void set_resolver(std::size_t seq, Resolver r) { transcript_.records.at(seq).resolver = r; }

  // Throws CorrectnessError if the item was already identified.
  void identify(Item item, Label label, std::optional<std::size_t> attributed_to,
                bool via_test);
  bool identified(Item item) const { return identified_.at(item) != 0; }

  // Drops already-identified items, keeping the relative order of the rest.
  void prune(std::vector<Item>& items) const;

  const Instance& instance() const { return oracle_.instance(); }
  std::size_t tests_used() const { return oracle_.query_count(); }
  const Transcript& transcript() const { return transcript_; }
  Transcript release() &&;

 private:
  PoolOracle oracle_;
  Transcript transcript_;
  std::vector<std::uint8_t> identified_;
};

struct RunResult {
  std::string algorithm;
  std::size_t tests_used = 0;
  Transcript transcript;
  // Indexed by item; empty optional = never identified.
  std::vector<std::optional<Label>> classified;
};

RunResult make_result(std::string algorithm, TestSession&& session);

// Throws CorrectnessError naming the first misclassified (or unidentified)
// item, AccountingError when test counts do not balance.
void finalize(const RunResult& run, const Instance& instance);

}  // namespace gtlab
