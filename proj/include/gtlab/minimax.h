#pragma once

// Exact M(d, n) for tiny instances: the optimal worst-case number of tests
// when the number of defectives d is known in advance.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gtlab {

class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinimaxLimits {
  std::size_t max_n = 8;
  std::size_t max_candidates = 70;
};

struct MinimaxStats {
  std::size_t states = 0;  // distinct canonical states solved
};

// Candidate family as item bitmasks (bit i = item i defective), n <= 16.
using Family = std::vector<std::uint16_t>;

// Canonical form of a family under item relabeling: isomorphic families map
// to the same key.
Family canonical_key(const Family& family, std::size_t n);

// Throws RefusalError when n or C(n, d) exceed the limits, UsageError when
// d > n.
std::uint64_t minimax_m(std::size_t n, std::size_t d, const MinimaxLimits& limits = {},
                        MinimaxStats* stats = nullptr);

}  // namespace gtlab
