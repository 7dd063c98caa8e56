#pragma once

// Worst-case enumeration over defective sets and grid verification of the
// bound checks.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtlab/core.h"
#include "gtlab/options.h"

namespace gtlab {

enum class Algorithm { kIndividual, kZd, kZu, kZc };

const char* to_string(Algorithm a);
// Throws UsageError for an unknown name.
Algorithm parse_algorithm(const std::string& name);
const std::vector<Algorithm>& all_algorithms();

// Tests every item on its own; always n tests.
RunResult run_individual(const Instance& instance);
RunResult run_algorithm(Algorithm alg, const Instance& instance, const RunOptions& options = {});

// Worker count: GTLAB_WORKERS when set to a positive integer, else the
// hardware concurrency (at least 1).
unsigned default_workers();

struct WorstCaseOptions {
  bool exhaustive = true;
  std::size_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;   // sampled mode only
  std::uint64_t cap = 10'000'000;
  unsigned workers = 0;  // 0 = default_workers()
  RunOptions run;
  bool per_run_checks = true;  // transcript analysis on Z^u slices, Z^c round checks
  std::size_t max_examples = 1;  // counterexamples kept per check
};

struct BoundCheck {
  std::string name;
  double value = 0.0;
  bool pass = true;
  bool asserted = true;  // reported-only checks never count as violations
};

struct Violation {
  std::string check;
  Algorithm algorithm = Algorithm::kZu;
  std::size_t n = 0;
  std::vector<Item> defectives;
  std::string detail;
  std::map<std::string, double> values;
};

struct WorstCaseCell {
  Algorithm algorithm = Algorithm::kZu;
  std::size_t n = 0;
  std::size_t d = 0;
  bool exhaustive = true;
  std::uint64_t runs = 0;
  std::size_t worst_tests = 0;
  std::vector<Item> argmax;  // first defective set (enumeration order) attaining the max
  std::vector<BoundCheck> bounds;
  std::map<std::string, std::uint64_t> run_failures;  // per-run check name -> count
  std::vector<Violation> examples;

  bool ok() const;
};

// Thrown when a run misclassifies an item or fails its accounting.
class RunFailure : public std::runtime_error {
 public:
  RunFailure(const std::string& what, Violation v)
      : std::runtime_error(what), violation_(std::move(v)) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

// Throws UsageError for d > n, n > 63, or an exhaustive cell above the cap.
// Throws RunFailure on the first incorrect run.
WorstCaseCell worst_case(Algorithm alg, std::size_t n, std::size_t d,
                         const WorstCaseOptions& options = {});

// Bound checks for a measured worst case (exhaustive semantics).
std::vector<BoundCheck> cell_bounds(Algorithm alg, std::size_t n, std::size_t d,
                                    std::size_t worst_tests);

struct GridReport {
  std::size_t n_max = 0;
  std::vector<WorstCaseCell> cells;
  std::size_t violation_count() const;
  bool ok() const { return violation_count() == 0; }
};

// Every (alg, 1 <= n <= n_max, 0 <= d <= n), exhaustive. Requires n_max <= 20.
GridReport verify_grid(std::size_t n_max, const std::vector<Algorithm>& algorithms,
                       const WorstCaseOptions& options = {});

}  // namespace gtlab
