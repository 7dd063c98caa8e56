#include "gtlab/minimax.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "gtlab/bounds.h"
#include "gtlab/core.h"

namespace gtlab {

namespace {

std::uint16_t swap_bits(std::uint16_t m, std::size_t i, std::size_t j) {
  const bool bi = (m >> i) & 1U, bj = (m >> j) & 1U;
  if (bi == bj) return m;
  return static_cast<std::uint16_t>(m ^ ((1U << i) | (1U << j)));
}

Family sorted(Family f) {
  std::sort(f.begin(), f.end());
  return f;
}

bool interchangeable(const Family& f, std::size_t i, std::size_t j) {
  Family g(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) g[k] = swap_bits(f[k], i, j);
  return sorted(std::move(g)) == f;
}

// Items that can be swapped without changing the (sorted) family.
std::vector<std::vector<std::size_t>> swap_classes(const Family& f, std::size_t n) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& c : classes) {
      if (interchangeable(f, c.front(), i)) {
        c.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

// Relabeling-invariant description of an item: degree, then sorted
// co-degrees with every other item.
std::vector<std::size_t> item_invariant(const Family& f, std::size_t n, std::size_t i) {
  std::vector<std::size_t> inv;
  std::size_t deg = 0;
  for (auto m : f) deg += (m >> i) & 1U;
  inv.push_back(deg);
  std::vector<std::size_t> co;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    std::size_t c = 0;
    for (auto m : f) c += ((m >> i) & (m >> j) & 1U);
    co.push_back(c);
  }
  std::sort(co.begin(), co.end());
  inv.insert(inv.end(), co.begin(), co.end());
  return inv;
}

Family relabel(const Family& f, const std::vector<std::size_t>& to) {
  Family g(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::uint16_t m = 0;
    for (std::size_t i = 0; i < to.size(); ++i) {
      if ((f[k] >> i) & 1U) m = static_cast<std::uint16_t>(m | (1U << to[i]));
    }
    g[k] = m;
  }
  return sorted(std::move(g));
}

}  // namespace

Family canonical_key(const Family& family, std::size_t n) {
  Family f = sorted(family);
  // Order items by invariant; only items sharing an invariant need to be
  // permuted, and swapping interchangeable items changes nothing, so each
  // block is enumerated as a multiset permutation of swap-class labels.
  std::vector<std::vector<std::size_t>> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = item_invariant(f, n, i);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inv[a] < inv[b]; });

  auto classes = swap_classes(f, n);
  std::vector<std::size_t> class_of(n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t i : classes[c]) class_of[i] = c;
  }

  // blocks[b] = (first target position, items in the block)
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> blocks;
  for (std::size_t p = 0; p < n; ++p) {
    if (p == 0 || inv[order[p]] != inv[order[p - 1]]) blocks.push_back({p, {}});
    blocks.back().second.push_back(order[p]);
  }

  Family best;
  bool have = false;
  std::vector<std::size_t> to(n);
  // per block: a label sequence over swap classes, permuted lexicographically
  std::vector<std::vector<std::size_t>> labels(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i : blocks[b].second) labels[b].push_back(class_of[i]);
    std::sort(labels[b].begin(), labels[b].end());
  }
  auto assign = [&]() {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::map<std::size_t, std::vector<std::size_t>> pool;
      for (std::size_t i : blocks[b].second) pool[class_of[i]].push_back(i);
      for (std::size_t k = 0; k < labels[b].size(); ++k) {
        auto& v = pool[labels[b][k]];
        to[v.back()] = blocks[b].first + k;
        v.pop_back();
      }
    }
    Family g = relabel(f, to);
    if (!have || g < best) {
      best = std::move(g);
      have = true;
    }
  };
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      assign();
      return;
    }
    std::sort(labels[b].begin(), labels[b].end());
    do {
      rec(b + 1);
    } while (std::next_permutation(labels[b].begin(), labels[b].end()));
  };
  rec(0);
  return best;
}

namespace {

unsigned ceil_log2(std::size_t x) {
  return x <= 1 ? 0U : static_cast<unsigned>(std::bit_width(x - 1));
}

class Solver {
 public:
  explicit Solver(std::size_t n) : n_(n) {}

  std::uint64_t value(const Family& f) {
    if (f.size() <= 1) return 0;
    Family key = canonical_key(f, n_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::uint64_t v = solve(f);
    memo_.emplace(std::move(key), v);
    return v;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  std::uint64_t solve(const Family& f) {
    const unsigned floor = ceil_log2(f.size());
    auto classes = swap_classes(f, n_);
    // enumerate per-class counts
    std::vector<std::uint16_t> queries;
    std::vector<std::size_t> cnt(classes.size(), 0);
    for (;;) {
      std::size_t c = 0;
      while (c < classes.size() && cnt[c] == classes[c].size()) cnt[c++] = 0;
      if (c == classes.size()) break;
      ++cnt[c];
      std::uint16_t q = 0;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        for (std::size_t j = 0; j < cnt[k]; ++j) q = static_cast<std::uint16_t>(q | (1U << classes[k][j]));
      }
      queries.push_back(q);
    }
    struct Split {
      std::size_t larger;
      std::uint16_t q;
    };
    std::vector<Split> splits;
    for (auto q : queries) {
      std::size_t hit = 0;
      for (auto m : f) hit += (m & q) ? 1 : 0;
      if (hit == 0 || hit == f.size()) continue;
      splits.push_back({std::max(hit, f.size() - hit), q});
    }
    std::stable_sort(splits.begin(), splits.end(),
                     [](const Split& a, const Split& b) { return a.larger < b.larger; });
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (const Split& s : splits) {
      if (1 + ceil_log2(s.larger) >= best) break;
      Family pure, cont;
      for (auto m : f) ((m & s.q) ? cont : pure).push_back(m);
      std::uint64_t a = value(pure);
      if (1 + a >= best) continue;
      std::uint64_t b = value(cont);
      best = std::min(best, 1 + std::max(a, b));
      if (best == floor) break;
    }
    return best;
  }

  std::size_t n_;
  std::map<Family, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t minimax_m(std::size_t n, std::size_t d, const MinimaxLimits& limits,
                        MinimaxStats* stats) {
  if (d > n) throw UsageError("minimax: d > n");
  if (n > limits.max_n || n > 16) {
    throw RefusalError("minimax: n=" + std::to_string(n) + " exceeds the limit n <= " +
                       std::to_string(std::min<std::size_t>(limits.max_n, 16)));
  }
  double c = std::exp2(log2_binomial(n, d));
  if (c > static_cast<double>(limits.max_candidates) + 0.5) {
    throw RefusalError("minimax: C(" + std::to_string(n) + "," + std::to_string(d) + ") = " +
                       std::to_string(static_cast<std::uint64_t>(c + 0.5)) +
                       " candidates exceed the limit " + std::to_string(limits.max_candidates));
  }
  Family f;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) == d) f.push_back(static_cast<std::uint16_t>(m));
  }
  Solver solver(n);
  std::uint64_t v = solver.value(f);
  if (stats) stats->states = solver.states();
  return v;
}

}  // namespace gtlab
