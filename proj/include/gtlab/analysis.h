#pragma once

// Proof bookkeeping rebuilt from a Z^u transcript: phases, the C1..C4
// partition, zig-zag tuples and their types, and the per-run inequalities.
//
// "Top-level" tests are the driver and additional records of the analysed
// stage. For a top-level test T, I(T) is T plus every record whose parent is
// T; n(T) and d(T) count the identifications attributed to T.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtlab/core.h"
#include "gtlab/split.h"

namespace gtlab {

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Phase {
  std::size_t index = 0;
  std::vector<std::size_t> tests;  // top-level seqs in order
};

enum class TupleType {
  kObs3i,
  kObs3ii,
  kObs3iii,
  kObs3iv,
  kObs3v,
  kT1,
  kT2,
  kT3,
  kT4,
  kDegenerate,  // contaminated pool cut short by the end of the item list
};

const char* to_string(TupleType t);

struct ZigZagTuple {
  std::size_t pure_test = 0;
  std::size_t cont_test = 0;
  std::optional<std::size_t> extra;
  unsigned rank = 0;
  std::size_t incurred = 0;
  std::size_t identified = 0;
  std::size_t defectives = 0;
  TupleType type = TupleType::kDegenerate;
};

struct Classification {
  std::vector<Phase> phases;
  std::vector<std::size_t> c1, c2, c3, c4;  // sorted seqs
  std::vector<std::size_t> additional;      // every additional test
  std::vector<ZigZagTuple> tuples;
};

// Per-test quantities of the top-level tests of one stage.
class TranscriptView {
 public:
  TranscriptView(const Transcript& transcript, Stage stage);

  struct Stats {
    std::size_t incurred = 1;
    std::size_t identified = 0;
    std::size_t defectives = 0;
  };

  const std::vector<std::size_t>& top() const { return top_; }
  const TestRecord& record(std::size_t seq) const { return transcript_->records.at(seq); }
  const Stats& stats(std::size_t seq) const { return stats_.at(seq); }
  bool is_top(std::size_t seq) const { return stats_.count(seq) != 0; }
  // Records of the stage, top-level or not.
  std::size_t stage_records() const { return stage_records_; }
  // Defectives identified within the stage.
  std::size_t stage_defectives() const { return stage_defectives_; }

 private:
  const Transcript* transcript_;
  std::vector<std::size_t> top_;
  std::map<std::size_t, Stats> stats_;
  std::size_t stage_records_ = 0;
  std::size_t stage_defectives_ = 0;
};

// Throws StructuralError when the top-level sequence breaks the phase
// grammar (misplaced additional test, contaminated test inside a phase,
// non-consecutive ranks).
std::vector<Phase> segment_phases(const TranscriptView& view);

// C1 = final phase when all of it is pure; C2 = rank-0 contaminated drivers;
// tuples pair each remaining contaminated driver of rank v with the most
// recent unmatched pure driver of rank v-1 (last in, first out over the
// rank walk); C4 = the unmatched pure drivers. Throws StructuralError when
// no partner exists or the partner's pool is not a_{v-1} items.
Classification classify(const TranscriptView& view, SizeSchedule schedule = &a_seq);

// Assigns the tuple type. Throws StructuralError for a shape
// outside the listed types.
TupleType type_tuple(const TranscriptView& view, const ZigZagTuple& tuple,
                     SizeSchedule schedule = &a_seq);

// Checks that tuples form a valid zig-zag decomposition of c3 (any pairing
// the definitions admit, not only the one classify picks). Appends reasons
// to why.
bool tuples_valid(const TranscriptView& view, const Classification& cls,
                  const std::vector<ZigZagTuple>& tuples, std::vector<std::string>* why = nullptr,
                  SizeSchedule schedule = &a_seq);

// Fills incurred / identified / defectives of a tuple from the view.
void measure_tuple(const TranscriptView& view, ZigZagTuple& tuple);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::map<std::string, double> values;
};

struct Verdict {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* first_failure() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
};

// Tuple count, each c3 test in exactly one tuple, C4 rank structure,
// partition, phase count and additional-test placement.
Verdict verify_observations(const TranscriptView& view, const Classification& cls);

// Per-class inequalities and the recomposition of the total test count.
// The C2..C4 aggregate check runs only when C2..C4 identified >= 3 defectives.
Verdict check_class_bounds(const TranscriptView& view, const Classification& cls);

// Segmentation, classification and both checkers; structural errors become
// failed checks. Empty stages yield an empty passing verdict.
struct RunAnalysis {
  std::optional<Classification> classification;
  Verdict verdict;
};
RunAnalysis analyze(const Transcript& transcript, Stage stage = Stage::kZu,
                    SizeSchedule schedule = &a_seq);

// 1.431 d (log2(n/d) + 1.1242); zero when d = 0.
double competitive_term(double n, double d);

}  // namespace gtlab
