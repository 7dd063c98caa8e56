#include "gtlab/symmetric.h"

#include <array>
#include <stdexcept>

#include "gtlab/upzigzag.h"
#include "gtlab/zigzag.h"

namespace gtlab {

namespace {

TestTag round_tag() {
  TestTag tag;
  tag.stage = Stage::kRound;
  return tag;
}

void test_individually(TestSession& session, std::span<const Item> items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t seq = session.test(items.subspan(i, 1), round_tag());
    bool bad = session.outcome(seq) == Outcome::kContaminated;
    session.identify(items[i], bad ? Label::kDefective : Label::kGood, seq, true);
  }
}

// Four group tests on consecutive blocks of size m; returns the
// concatenation of contaminated blocks and adds cleared items to goods.
std::vector<Item> group_round(TestSession& session, std::span<const Item> items, std::size_t m,
                              std::size_t& alpha, std::size_t& goods) {
  std::vector<Item> merged;
  alpha = 0;
  for (std::size_t v = 0; v < 4; ++v) {
    std::span<const Item> block = items.subspan(v * m, m);
    std::size_t seq = session.test(block, round_tag());
    if (session.outcome(seq) == Outcome::kContaminated) {
      ++alpha;
      merged.insert(merged.end(), block.begin(), block.end());
    } else {
      for (Item i : block) session.identify(i, Label::kGood, seq, true);
      goods += m;
    }
  }
  return merged;
}

}  // namespace

ZcRun run_zc_detailed(const Instance& instance, const RunOptions& options) {
  TestSession session(instance);
  ZcPlan plan;
  const std::size_t n = instance.size();
  std::vector<Item> items(n);
  for (std::size_t i = 0; i < n; ++i) items[i] = static_cast<Item>(i);

  plan.n1 = n / 4;
  plan.nR1 = n - 4 * plan.n1;
  std::span<const Item> all(items);
  test_individually(session, all.subspan(4 * plan.n1));

  if (plan.n1 > 0) {
    std::vector<Item> merged =
        group_round(session, all.first(4 * plan.n1), plan.n1, plan.alpha1, plan.group_goods);
    if (plan.alpha1 == 1) {
      plan.branch = ZcBranch::kZd;
    } else if (plan.alpha1 >= 3) {
      plan.branch = ZcBranch::kZu;
    } else if (plan.alpha1 == 2) {
      const std::size_t n2 = plan.n1 / 2;
      plan.n2 = n2;
      plan.nR2 = 2 * plan.n1 - 4 * n2;
      std::span<const Item> m(merged);
      test_individually(session, m.subspan(4 * n2));
      merged.clear();
      if (n2 > 0) {
        std::size_t alpha2 = 0;
        merged = group_round(session, m.first(4 * n2), n2, alpha2, plan.group_goods);
        plan.alpha2 = alpha2;
        if (alpha2 == 0) {
          throw std::logic_error("Z^c: second round found no contaminated group");
        }
        plan.branch = alpha2 <= 2 ? ZcBranch::kZd : ZcBranch::kZu;
      }
    }
    plan.sub_input = plan.branch == ZcBranch::kNone ? 0 : merged.size();
    if (plan.branch == ZcBranch::kZd) {
      zd_procedure(session, std::move(merged), Stage::kZd, options);
    } else if (plan.branch == ZcBranch::kZu) {
      zu_procedure(session, std::move(merged), Stage::kZu, options);
    }
  }
  return {make_result("zc", std::move(session)), plan};
}

RunResult run_zc(const Instance& instance, const RunOptions& options) {
  return run_zc_detailed(instance, options).result;
}

bool zc_quarter_condition(const ZcPlan& plan) {
  if (plan.branch != ZcBranch::kZd) return true;
  const std::size_t entered = 4 * plan.n1 - plan.nR2.value_or(0);
  return 4 * plan.group_goods >= 3 * entered;
}

}  // namespace gtlab
