#include "gtlab/upzigzag.h"

#include <algorithm>
#include <string>

namespace gtlab {

namespace {

constexpr unsigned kAdditionalTrigger = 6;

TestTag incurred_tag(std::size_t driver, Stage stage) {
  TestTag tag;
  tag.kind = TestKind::kIncurred;
  tag.stage = stage;
  tag.parent = driver;
  tag.sub = SubTest::kIndividual;
  return tag;
}

// Tests every item of s individually; returns the number found defective.
std::size_t test_each(TestSession& session, std::span<const Item> s, std::size_t driver,
                      Stage stage) {
  std::size_t defectives = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t seq = session.test(s.subspan(i, 1), incurred_tag(driver, stage));
    bool bad = session.outcome(seq) == Outcome::kContaminated;
    session.identify(s[i], bad ? Label::kDefective : Label::kGood, driver, true);
    defectives += bad ? 1 : 0;
  }
  return defectives;
}

void end_phase(UpZigZagState& state, const RunOptions& options) {
  state.p_c = 0;
  if (options.delta_policy == DeltaFlagPolicy::kAtPhaseEnd) state.delta_ts = false;
}

}  // namespace

void two_test(TestSession& session, std::span<const Item> s, std::size_t driver,
              UpZigZagState& state, Stage stage) {
  if (s.empty() || s.size() > 2) {
    throw PreconditionError("2-Test needs 1 or 2 items, got " + std::to_string(s.size()));
  }
  if (state.k != 1) throw PreconditionError("2-Test runs at k=1 only");
  session.set_resolver(driver, s.size() == 1 ? Resolver::kSingleton : Resolver::kTwoTest);
  if (s.size() == 1) {
    session.identify(s[0], Label::kDefective, driver, false);
    state.k = 0;
    state.p_c = 0;
    state.delta_ts = false;
    return;
  }
  if (test_each(session, s, driver, stage) == 1) {
    session.set_status(driver, Outcome::kPure);
    state.k = 2;
    ++state.p_c;
    state.delta_ts = true;
  } else {
    state.k = 0;
    state.p_c = 0;
    state.delta_ts = false;
  }
}

void three_test(TestSession& session, std::span<const Item> s, std::size_t driver,
                UpZigZagState& state, Stage stage) {
  if (s.empty() || s.size() > 3) {
    throw PreconditionError("3-Test needs 1 to 3 items, got " + std::to_string(s.size()));
  }
  if (state.k != 2 || !state.delta_ts) {
    throw PreconditionError("3-Test runs at k=2 with the 2-Test flag set only");
  }
  session.set_resolver(driver, Resolver::kThreeTest);
  test_each(session, s, driver, stage);
  state.k = 1;
  state.p_c = 0;
  state.delta_ts = false;
}

void zu_procedure(TestSession& session, std::vector<Item> items, Stage stage,
                  const RunOptions& options) {
  UpZigZagState st;
  st.remaining = std::move(items);
  while (!st.remaining.empty()) {
    if (st.p_c == kAdditionalTrigger && st.remaining.size() > options.schedule(st.k)) {
      TestTag tag;
      tag.kind = TestKind::kAdditional;
      tag.stage = stage;
      std::size_t seq = session.test(st.remaining, tag);
      if (session.outcome(seq) == Outcome::kPure) {
        for (Item i : st.remaining) session.identify(i, Label::kGood, seq, true);
        st.remaining.clear();
        break;
      }
    }

    std::size_t m = std::min(options.schedule(st.k), st.remaining.size());
    std::span<const Item> pool(st.remaining.data(), m);
    TestTag tag;
    tag.stage = stage;
    tag.rank = st.k;
    std::size_t seq = session.test(pool, tag);

    if (session.outcome(seq) == Outcome::kPure) {
      for (Item i : pool) session.identify(i, Label::kGood, seq, true);
      ++st.k;
      ++st.p_c;
    } else if (m == 1 && st.k > 0) {
      session.set_resolver(seq, Resolver::kSingleton);
      session.identify(pool[0], Label::kDefective, seq, true);
      --st.k;
      st.p_c = 0;
      st.delta_ts = false;
    } else if (st.k == 1) {
      two_test(session, pool, seq, st, stage);
    } else if (st.k == 2 && st.delta_ts) {
      three_test(session, pool, seq, st, stage);
    } else {
      end_phase(st, options);
      if (st.k == 0) {
        session.set_resolver(seq, Resolver::kSingleton);
        session.identify(pool[0], Label::kDefective, seq, true);
      } else {
        session.set_resolver(seq, Resolver::kFourSplit);
        SplitContext ctx{stage, seq, options.schedule};
        SplitOutcome split = four_split(session, pool, st.k, ctx);
        if (split.selected_part) session.set_split_part(seq, *split.selected_part);
        --st.k;
      }
    }
    session.prune(st.remaining);
  }
}

RunResult run_zu(const Instance& instance, const RunOptions& options) {
  TestSession session(instance);
  std::vector<Item> items(instance.size());
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = static_cast<Item>(i);
  zu_procedure(session, std::move(items), Stage::kZu, options);
  return make_result("zu", std::move(session));
}

}  // namespace gtlab
