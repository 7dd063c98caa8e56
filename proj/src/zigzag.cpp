#include "gtlab/zigzag.h"

#include <algorithm>

namespace gtlab {

unsigned zd_initial_k(std::size_t n) {
  if (n == 0) return 0;
  unsigned k = 0;
  while ((std::size_t{3} << k) < 4 * n) ++k;
  return k;
}

void zd_procedure(TestSession& session, std::vector<Item> items, Stage stage,
                  const RunOptions& options) {
  ZdState st{std::move(items), 0};
  st.k = zd_initial_k(st.remaining.size());
  while (!st.remaining.empty()) {
    std::size_t m = std::min(options.schedule(st.k), st.remaining.size());
    std::span<const Item> pool(st.remaining.data(), m);
    TestTag tag;
    tag.stage = stage;
    tag.rank = st.k;
    std::size_t seq = session.test(pool, tag);
    if (session.outcome(seq) == Outcome::kPure) {
      for (Item i : pool) session.identify(i, Label::kGood, seq, true);
      ++st.k;
    } else if (st.k > 0) {
      session.set_resolver(seq, Resolver::kFourSplit);
      SplitContext ctx{stage, seq, options.schedule};
      SplitOutcome split = four_split(session, pool, st.k, ctx);
      if (split.selected_part) session.set_split_part(seq, *split.selected_part);
      --st.k;
    } else {
      if (m != 1) throw PreconditionError("Z^d: rank-0 pool must hold one item");
      session.set_resolver(seq, Resolver::kSingleton);
      session.identify(pool[0], Label::kDefective, seq, true);
    }
    session.prune(st.remaining);
  }
}

RunResult run_zd(const Instance& instance, const RunOptions& options) {
  TestSession session(instance);
  std::vector<Item> items(instance.size());
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = static_cast<Item>(i);
  zd_procedure(session, std::move(items), Stage::kZd, options);
  return make_result("zd", std::move(session));
}

}  // namespace gtlab
