#pragma once

// Closed-form lower and upper bounds on worst-case test counts, plus the
// inequality checks the harness applies to measured worst cases.
// All logarithms are base 2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtlab {

enum class Direction { kLower, kUpper };

struct BoundReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::string name;
  double value = 0.0;
  bool applicable = false;
  Direction direction = Direction::kUpper;
};

const char* to_string(Direction d);

inline constexpr double kDefaultRho = 0.5;
inline constexpr double kCompareSlack = 1e-9;

// log2 C(n, d) from the exact binomial. Requires d <= n.
double log2_binomial(std::size_t n, std::size_t d);

// ceil(log2 C(n, d)), exact. Requires d <= n.
std::uint64_t info_lower_bound(std::size_t n, std::size_t d);

// Stirling-type lower bound for 0 < rho < 1 and 0 < d < rho * n.
BoundReport eq1_lower_bound(std::size_t n, std::size_t d, double rho = kDefaultRho);

// d (log r + (r-1) log(r/(r-1))) - 0.5 log d - 1.5 with r = n/d, 0 < d <= n/2.
BoundReport lemma8_lower_bound(std::size_t n, std::size_t d);

// (r-1) log(r/(r-1)); the ratio term of lemma8_lower_bound. Requires r > 1.
double lemma8_ratio_term(double r);

// M(d, n) = n - 1 when 8n <= 21d and d < n.
std::optional<std::uint64_t> lemma7_exact(std::size_t n, std::size_t d);

// Max over the applicable lower bounds (info, eq1, lemma8, lemma7).
// Requires d < n.
double best_lower_bound(std::size_t n, std::size_t d, double rho = kDefaultRho);

BoundReport zd_upper(std::size_t n, std::size_t d);
BoundReport zu_upper_d(std::size_t n, std::size_t d);
BoundReport zu_upper_n(std::size_t n);
BoundReport zc_upper_d(std::size_t n, std::size_t d, int constant = 32);
BoundReport zc_upper_n(std::size_t n);
BoundReport hwang_upper(std::size_t n, std::size_t d);
BoundReport corollary1_upper(std::size_t n, std::size_t d, double psi);
BoundReport corollary2_upper(std::size_t n, double psi);

// a <= b up to kCompareSlack (relative to max(1, |b|)).
bool within(double a, double b);

struct Theorem2Verdict {
  bool applicable = false;
  char component = '-';  // 'a' (d = 0), 'b' (8n/21 <= d < n), 'c' (1 <= d < 8n/21)
  double limit = 0.0;
  bool pass = true;
  bool asserted = false;  // false when only the weaker information-bound proxy applies
  std::string detail;
};

Theorem2Verdict theorem2_check(std::size_t n, std::size_t d, std::size_t tests);

// d1 log(n1/d1) + d2 log(n2/d2) <= d log(n/d), terms with d_i = 0 being 0.
// Throws UsageError unless n_i > 0 and 0 <= d_i <= n_i.
bool lemma3_check(double n1, double d1, double n2, double d2);

// Every upper bound evaluator at (n, d), in a fixed order.
std::vector<BoundReport> all_bounds(std::size_t n, std::size_t d, double rho = kDefaultRho);

}  // namespace gtlab
