#include "gtlab/split.h"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace gtlab {

std::size_t a_seq(unsigned i) {
  if (i == 0) return 1;
  if (i == 1) return 2;
  if (i - 2 >= std::numeric_limits<std::size_t>::digits - 2) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::size_t{3} << (i - 2);
}

namespace {

TestTag sub_tag(const SplitContext& ctx, SubTest sub) {
  TestTag tag;
  tag.kind = ctx.parent ? TestKind::kIncurred : TestKind::kDriver;
  tag.stage = ctx.stage;
  tag.parent = ctx.parent;
  tag.sub = sub;
  return tag;
}

void mark_goods(TestSession& session, std::span<const Item> items, const SplitContext& ctx,
                SplitOutcome& out) {
  for (Item i : items) {
    session.identify(i, Label::kGood, ctx.parent, true);
    out.goods_identified.push_back(i);
  }
}

}  // namespace

SplitOutcome dig(TestSession& session, std::span<const Item> x, const SplitContext& ctx) {
  if (x.empty()) throw PreconditionError("dig on an empty set");
  SplitOutcome out;
  std::vector<Item> cur(x.begin(), x.end());
  bool last_was_singleton_hit = false;
  while (cur.size() > 1) {
    std::size_t half = (cur.size() + 1) / 2;
    std::span<const Item> front(cur.data(), half);
    std::size_t seq = session.test(front, sub_tag(ctx, SubTest::kHalving));
    ++out.tests_spent;
    if (session.outcome(seq) == Outcome::kContaminated) {
      last_was_singleton_hit = (half == 1);
      cur.resize(half);
    } else {
      mark_goods(session, front, ctx, out);
      cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(half));
      last_was_singleton_hit = false;
    }
  }
  session.identify(cur.front(), Label::kDefective, ctx.parent, last_was_singleton_hit);
  out.defective_found = cur.front();
  return out;
}

SplitOutcome four_split(TestSession& session, std::span<const Item> x, unsigned k,
                        const SplitContext& ctx) {
  if (x.empty()) throw PreconditionError("4-Split on an empty set");
  if (x.size() > ctx.schedule(k)) {
    throw PreconditionError("4-Split: |X|=" + std::to_string(x.size()) + " exceeds a_" +
                            std::to_string(k) + "=" + std::to_string(ctx.schedule(k)));
  }
  SplitOutcome out;
  if (x.size() == 1) {
    session.identify(x[0], Label::kDefective, ctx.parent, false);
    out.defective_found = x[0];
    return out;
  }
  if (x.size() <= 3) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i + 1 == x.size()) {
        session.identify(x[i], Label::kDefective, ctx.parent, false);
        out.defective_found = x[i];
        break;
      }
      std::size_t seq = session.test(x.subspan(i, 1), sub_tag(ctx, SubTest::kIndividual));
      ++out.tests_spent;
      if (session.outcome(seq) == Outcome::kContaminated) {
        session.identify(x[i], Label::kDefective, ctx.parent, true);
        out.defective_found = x[i];
        break;
      }
      session.identify(x[i], Label::kGood, ctx.parent, true);
      out.goods_identified.push_back(x[i]);
    }
    return out;
  }
  if (k < 3) {
    throw PreconditionError("4-Split: |X|=" + std::to_string(x.size()) +
                            " needs k >= 3, got k=" + std::to_string(k));
  }

  const std::size_t big = std::size_t{1} << (k - 2);
  const std::size_t small = std::size_t{1} << (k - 3);
  const std::array<std::size_t, 4> caps{big, big, small, small};
  std::array<std::size_t, 4> sizes{};
  std::size_t left = x.size();
  for (std::size_t p = 0; p < 4; ++p) {
    sizes[p] = std::min(caps[p], left);
    left -= sizes[p];
  }
  if (left != 0) {
    throw PreconditionError("4-Split: partition does not cover |X|=" +
                            std::to_string(x.size()) + " at k=" + std::to_string(k));
  }
  unsigned last = 0;
  for (unsigned p = 0; p < 4; ++p) {
    if (sizes[p] > 0) last = p;
  }

  static constexpr std::array<SubTest, 4> kParts{SubTest::kPartY, SubTest::kPartZ,
                                                 SubTest::kPartU, SubTest::kPartV};
  std::size_t offset = 0;
  for (unsigned p = 0; p <= last; ++p) {
    std::span<const Item> part = x.subspan(offset, sizes[p]);
    offset += sizes[p];
    bool contaminated = (p == last);  // all earlier parts pure: inferred
    if (p != last) {
      std::size_t seq = session.test(part, sub_tag(ctx, kParts[p]));
      ++out.tests_spent;
      contaminated = session.outcome(seq) == Outcome::kContaminated;
    }
    if (!contaminated) {
      mark_goods(session, part, ctx, out);
      continue;
    }
    SplitOutcome inner = dig(session, part, ctx);
    out.tests_spent += inner.tests_spent;
    out.defective_found = inner.defective_found;
    out.goods_identified.insert(out.goods_identified.end(), inner.goods_identified.begin(),
                                inner.goods_identified.end());
    out.selected_part = p;
    break;
  }
  return out;
}

}  // namespace gtlab
