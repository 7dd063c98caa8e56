#pragma once

#include "gtlab/split.h"

namespace gtlab {

// When the Z^u 2-Test flag (Delta_TS) is cleared.
//  kByTestProcedures: only 2-Test {1,1} and 3-Test clear it, as in the
//    procedure listing. The flag then survives a phase that ends above rank 2.
//  kAtPhaseEnd: additionally cleared whenever a phase ends.
enum class DeltaFlagPolicy { kByTestProcedures, kAtPhaseEnd };

struct RunOptions {
  SizeSchedule schedule = &a_seq;
  DeltaFlagPolicy delta_policy = DeltaFlagPolicy::kByTestProcedures;
};

}  // namespace gtlab
