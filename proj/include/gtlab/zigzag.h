#pragma once

// Improved zig-zag procedure Z^d: start with a pool covering the whole set,
// grow the size index on a pure pool, shrink it after extracting a defective.

#include <vector>

#include "gtlab/core.h"
#include "gtlab/options.h"

namespace gtlab {

struct ZdState {
  std::vector<Item> remaining;
  unsigned k = 0;
};

// ceil(log2(4n/3)), computed exactly: the least k with 3 * 2^k >= 4n.
// Zero for n = 0.
unsigned zd_initial_k(std::size_t n);

// Runs Z^d on items (in order) inside an existing session, tagging records
// with stage. Empty input issues no tests.
void zd_procedure(TestSession& session, std::vector<Item> items, Stage stage,
                  const RunOptions& options = {});

RunResult run_zd(const Instance& instance, const RunOptions& options = {});

}  // namespace gtlab
