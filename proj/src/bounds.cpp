#include "gtlab/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gtlab/core.h"

#include <boost/multiprecision/cpp_int.hpp>

namespace gtlab {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(std::size_t n, std::size_t d) {
  if (d > n) throw UsageError("binomial: d > n");
  d = std::min(d, n - d);
  cpp_int c = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    c *= n - d + i;
    c /= i;
  }
  return c;
}

double log2_of(const cpp_int& v) {
  if (v <= 0) throw UsageError("log2 of nonpositive");
  std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 53) return std::log2(v.convert_to<double>());
  cpp_int top = v >> (bits - 53);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 53);
}

double dlog(double n, double d) { return d == 0 ? 0.0 : d * std::log2(n / d); }

BoundReport report(std::size_t n, std::size_t d, const char* name, Direction dir) {
  BoundReport r;
  r.n = n;
  r.d = d;
  r.name = name;
  r.direction = dir;
  return r;
}

BoundReport competitive(std::size_t n, std::size_t d, const char* name, double c) {
  BoundReport r = report(n, d, name, Direction::kUpper);
  double nd = static_cast<double>(n), dd = static_cast<double>(d);
  r.value = 1.431 * dd * (std::log2(nd / dd) + 1.1242) + c;
  return r;
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::kLower ? "lower" : "upper"; }

double log2_binomial(std::size_t n, std::size_t d) { return log2_of(binomial(n, d)); }

std::uint64_t info_lower_bound(std::size_t n, std::size_t d) {
  cpp_int c = binomial(n, d);
  if (c == 1) return 0;
  // ceil(log2 c) = bit length of c - 1
  cpp_int m = c - 1;
  return boost::multiprecision::msb(m) + 1;
}

BoundReport eq1_lower_bound(std::size_t n, std::size_t d, double rho) {
  BoundReport r = report(n, d, "eq1", Direction::kLower);
  double nd = static_cast<double>(n), dd = static_cast<double>(d);
  if (!(rho > 0.0 && rho < 1.0) || d == 0 || !(dd < rho * nd)) return r;
  r.applicable = true;
  r.value = dd * (std::log2(nd / dd) + std::log2(std::exp(1.0) * std::sqrt(1.0 - rho))) -
            0.5 * std::log2(dd) - 0.5 * std::log2(1.0 - rho) - 1.567;
  return r;
}

double lemma8_ratio_term(double r) {
  if (!(r > 1.0)) throw UsageError("lemma8_ratio_term needs r > 1");
  return (r - 1.0) * std::log2(r / (r - 1.0));
}

BoundReport lemma8_lower_bound(std::size_t n, std::size_t d) {
  BoundReport r = report(n, d, "lemma8", Direction::kLower);
  if (d == 0 || 2 * d > n) return r;
  double dd = static_cast<double>(d);
  double ratio = static_cast<double>(n) / dd;
  r.applicable = true;
  r.value = dd * (std::log2(ratio) + lemma8_ratio_term(ratio)) - 0.5 * std::log2(dd) - 1.5;
  return r;
}

std::optional<std::uint64_t> lemma7_exact(std::size_t n, std::size_t d) {
  if (d < n && 8 * n <= 21 * d) return n - 1;
  return std::nullopt;
}

double best_lower_bound(std::size_t n, std::size_t d, double rho) {
  if (d >= n) throw UsageError("best_lower_bound needs d < n");
  if (auto exact = lemma7_exact(n, d)) return static_cast<double>(*exact);
  double best = static_cast<double>(info_lower_bound(n, d));
  for (const BoundReport& b : {eq1_lower_bound(n, d, rho), lemma8_lower_bound(n, d)}) {
    if (b.applicable) best = std::max(best, b.value);
  }
  return best;
}

BoundReport zd_upper(std::size_t n, std::size_t d) {
  BoundReport r = report(n, d, "zd_upper", Direction::kUpper);
  if (d == 0 || d > n) return r;
  double nd = static_cast<double>(n), dd = static_cast<double>(d);
  double ld = std::log2(dd);
  r.applicable = true;
  r.value = dd * std::log2(nd / dd) + (5.0 - std::log2(5.0)) * dd + 0.5 * ld * ld +
            (std::log2(5.0 / 3.0) + 1.5) * ld + 4.0;
  return r;
}

BoundReport zu_upper_d(std::size_t n, std::size_t d) {
  if (d < 3 || d > n) return report(n, d, "zu_upper_d", Direction::kUpper);
  BoundReport r = competitive(n, d, "zu_upper_d", 23.0);
  r.applicable = true;
  return r;
}

BoundReport zu_upper_n(std::size_t n) {
  BoundReport r = report(n, 0, "zu_upper_n", Direction::kUpper);
  r.applicable = true;
  r.value = 1.4 * static_cast<double>(n);
  return r;
}

BoundReport zc_upper_d(std::size_t n, std::size_t d, int constant) {
  const char* name = constant == 23 ? "zc_upper_d23" : "zc_upper_d32";
  if (d == 0 || d > n || (constant != 23 && constant != 32)) {
    return report(n, d, name, Direction::kUpper);
  }
  BoundReport r = competitive(n, d, name, constant);
  r.applicable = true;
  return r;
}

BoundReport zc_upper_n(std::size_t n) {
  BoundReport r = report(n, 0, "zc_upper_n", Direction::kUpper);
  r.applicable = true;
  r.value = 1.4 * static_cast<double>(n) + 13.0;
  return r;
}

BoundReport hwang_upper(std::size_t n, std::size_t d) {
  BoundReport r = report(n, d, "hwang_upper", Direction::kUpper);
  if (d == 0 || d > n) return r;
  r.applicable = true;
  r.value = static_cast<double>(info_lower_bound(n, d)) + static_cast<double>(d) - 1.0;
  return r;
}

BoundReport corollary1_upper(std::size_t n, std::size_t d, double psi) {
  BoundReport r = report(n, d, "corollary1", Direction::kUpper);
  if (d == 0 || 4 * d > n || !(psi > 0.0)) return r;
  double nd = static_cast<double>(n), dd = static_cast<double>(d);
  r.applicable = true;
  r.value = 1.431 * dd * (std::log2(nd / dd) + 1.0) + 4.0 + psi;
  return r;
}

BoundReport corollary2_upper(std::size_t n, double psi) {
  BoundReport r = report(n, 0, "corollary2", Direction::kUpper);
  if (!(psi > 0.0)) return r;
  r.applicable = true;
  r.value = 1.07325 * static_cast<double>(n) + 4.0 + psi;
  return r;
}

bool within(double a, double b) {
  return a <= b + kCompareSlack * std::max(1.0, std::fabs(b));
}

Theorem2Verdict theorem2_check(std::size_t n, std::size_t d, std::size_t tests) {
  Theorem2Verdict v;
  if (d >= n) {
    v.detail = "d = n excluded";
    return v;
  }
  v.applicable = true;
  v.asserted = true;
  const double t = static_cast<double>(tests);
  if (d == 0) {
    v.component = 'a';
    v.limit = 7.0;
  } else if (8 * n <= 21 * d) {
    v.component = 'b';
    v.limit = 1.431 * static_cast<double>(n - 1) + 15.0;
  } else {
    v.component = 'c';
    BoundReport l8 = lemma8_lower_bound(n, d);
    if (l8.applicable) {
      v.limit = 1.431 * l8.value + 39.0;
    } else {
      v.limit = 1.431 * static_cast<double>(info_lower_bound(n, d)) + 39.0;
      v.asserted = false;
      v.detail = "information-bound proxy";
    }
  }
  v.pass = within(t, v.limit);
  return v;
}

bool lemma3_check(double n1, double d1, double n2, double d2) {
  if (!(n1 > 0 && n2 > 0 && d1 >= 0 && d2 >= 0 && d1 <= n1 && d2 <= n2)) {
    throw UsageError("lemma3_check: need n_i > 0 and 0 <= d_i <= n_i");
  }
  return within(dlog(n1, d1) + dlog(n2, d2), dlog(n1 + n2, d1 + d2));
}

std::vector<BoundReport> all_bounds(std::size_t n, std::size_t d, double rho) {
  std::vector<BoundReport> out;
  BoundReport info = report(n, d, "info", Direction::kLower);
  if (d <= n) {
    info.applicable = true;
    info.value = static_cast<double>(info_lower_bound(n, d));
  }
  out.push_back(info);
  out.push_back(eq1_lower_bound(n, d, rho));
  out.push_back(lemma8_lower_bound(n, d));
  BoundReport l7 = report(n, d, "lemma7", Direction::kLower);
  if (auto v = lemma7_exact(n, d)) {
    l7.applicable = true;
    l7.value = static_cast<double>(*v);
  }
  out.push_back(l7);
  out.push_back(zd_upper(n, d));
  out.push_back(zu_upper_d(n, d));
  out.push_back(zu_upper_n(n));
  out.push_back(zc_upper_d(n, d, 32));
  out.push_back(zc_upper_d(n, d, 23));
  out.push_back(zc_upper_n(n));
  out.push_back(hwang_upper(n, d));
  out.push_back(corollary1_upper(n, d, 4.0));
  out.push_back(corollary2_upper(n, 4.0));
  return out;
}

}  // namespace gtlab
