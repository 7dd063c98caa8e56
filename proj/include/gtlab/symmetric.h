#pragma once

// Symmetric combinatorial algorithm Z^c: one or two rounds of four equal
// group tests, then Z^d or Z^u on the contaminated groups.

#include <cstddef>
#include <optional>

#include "gtlab/core.h"
#include "gtlab/options.h"

namespace gtlab {

enum class ZcBranch { kNone, kZd, kZu };

struct ZcPlan {
  std::size_t n1 = 0;
  std::size_t nR1 = 0;
  std::size_t alpha1 = 0;
  // Second round; set only when alpha1 = 2.
  std::optional<std::size_t> n2;
  std::optional<std::size_t> nR2;
  std::optional<std::size_t> alpha2;
  ZcBranch branch = ZcBranch::kNone;
  std::size_t sub_input = 0;    // items handed to Z^d / Z^u
  std::size_t group_goods = 0;  // items cleared by pure group tests
};

struct ZcRun {
  RunResult result;
  ZcPlan plan;
};

ZcRun run_zc_detailed(const Instance& instance, const RunOptions& options = {});
RunResult run_zc(const Instance& instance, const RunOptions& options = {});

// When the Z^d branch runs: at least 3/4 of the items that entered the group
// rounds (4 n1 minus the second-round remainder) were cleared by pure group
// tests. Vacuously true on other branches.
bool zc_quarter_condition(const ZcPlan& plan);

}  // namespace gtlab
