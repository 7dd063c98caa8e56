#pragma once

// Up-zig-zag procedure Z^u with the 2-Test and 3-Test refinements and the
// whole-remainder additional test.

#include <span>
#include <vector>

#include "gtlab/core.h"
#include "gtlab/options.h"

namespace gtlab {

struct UpZigZagState {
  std::vector<Item> remaining;
  unsigned k = 0;
  unsigned p_c = 0;  // pure-status driver tests since the last phase end
  bool delta_ts = false;
};

// 2-Test on a k=1 driver pool that tested contaminated. Tests each item of a
// size-2 pool. {0,1}: k=2, p_c+1, delta set, driver status pure. {1,1}: k=0,
// p_c=0, delta cleared. A size-1 pool is already known defective and costs
// nothing more. Throws PreconditionError for |s| > 2 or k != 1.
void two_test(TestSession& session, std::span<const Item> s, std::size_t driver,
              UpZigZagState& state, Stage stage = Stage::kZu);

// 3-Test on a k=2 driver pool that tested contaminated while delta is set.
// Tests every item; k=1, p_c=0, delta cleared. Throws PreconditionError for
// |s| > 3, k != 2 or delta clear.
void three_test(TestSession& session, std::span<const Item> s, std::size_t driver,
                UpZigZagState& state, Stage stage = Stage::kZu);

void zu_procedure(TestSession& session, std::vector<Item> items, Stage stage,
                  const RunOptions& options = {});

RunResult run_zu(const Instance& instance, const RunOptions& options = {});

}  // namespace gtlab
