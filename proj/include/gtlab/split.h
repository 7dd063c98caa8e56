#pragma once

// Subset-size sequence, binary splitting (DIG) and 4-Split.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gtlab/core.h"

namespace gtlab {

// a_i = ceil(3 * 2^(i-2)): 1, 2, 3, 6, 12, 24, ... Saturates at SIZE_MAX.
std::size_t a_seq(unsigned i);

// Pool-size schedule used by the zig-zag procedures. Production code always
// uses a_seq; tests substitute mutants to check that the harness notices.
using SizeSchedule = std::size_t (*)(unsigned);

// Where sub-tests are attributed. With a parent, sub-tests are recorded as
// incurred by that driver and identifications are attributed to it; without
// one (standalone calls) they are recorded as unranked drivers.
struct SplitContext {
  Stage stage = Stage::kStandalone;
  std::optional<std::size_t> parent;
  SizeSchedule schedule = &a_seq;
};

struct SplitOutcome {
  std::optional<Item> defective_found;
  std::vector<Item> goods_identified;
  std::size_t tests_spent = 0;
  // Which of Y, Z, U, V (0..3) held the defective when 4-Split partitioned.
  std::optional<unsigned> selected_part;
};

// Binary splitting on a set the caller knows to be contaminated. Each round
// tests the first ceil(|X|/2) items. At most ceil(log2 |X|) tests.
SplitOutcome dig(TestSession& session, std::span<const Item> x, const SplitContext& ctx = {});

// Finds one defective in a contaminated X with |X| <= schedule(k).
//  |X| = 1    : the item is defective, no test.
//  |X| = 2..3 : individual tests until the first defective; the last item is
//               inferred defective when all before it tested pure. Items after
//               the defective stay unidentified.
//  |X| >= 4   : partition into Y, Z (2^(k-2) each) and U, V (2^(k-3) each) in
//               order; test parts until one is contaminated, the last nonempty
//               part being inferred contaminated without a test; DIG on it.
// Throws PreconditionError for an empty X, |X| > schedule(k), or |X| >= 4 with
// k < 3.
SplitOutcome four_split(TestSession& session, std::span<const Item> x, unsigned k,
                        const SplitContext& ctx = {});

}  // namespace gtlab
