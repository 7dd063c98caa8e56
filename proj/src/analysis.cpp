#include "gtlab/analysis.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "gtlab/bounds.h"

namespace gtlab {

const char* to_string(TupleType t) {
  switch (t) {
    case TupleType::kObs3i: return "obs3-i";
    case TupleType::kObs3ii: return "obs3-ii";
    case TupleType::kObs3iii: return "obs3-iii";
    case TupleType::kObs3iv: return "obs3-iv";
    case TupleType::kObs3v: return "obs3-v";
    case TupleType::kT1: return "T1";
    case TupleType::kT2: return "T2";
    case TupleType::kT3: return "T3";
    case TupleType::kT4: return "T4";
    case TupleType::kDegenerate: return "degenerate";
  }
  return "?";
}

double competitive_term(double n, double d) {
  if (d == 0) return 0.0;
  return 1.431 * d * (std::log2(n / d) + 1.1242);
}

TranscriptView::TranscriptView(const Transcript& transcript, Stage stage)
    : transcript_(&transcript) {
  for (const TestRecord& r : transcript.records) {
    if (r.stage != stage) continue;
    ++stage_records_;
    if (r.kind != TestKind::kIncurred) {
      top_.push_back(r.seq);
      stats_[r.seq];
    }
  }
  for (const TestRecord& r : transcript.records) {
    if (r.stage == stage && r.kind == TestKind::kIncurred && r.parent) {
      auto it = stats_.find(*r.parent);
      if (it == stats_.end()) {
        throw StructuralError("incurred record " + std::to_string(r.seq) +
                              " has a parent outside the stage");
      }
      ++it->second.incurred;
    }
  }
  for (const Identification& id : transcript.identifications) {
    if (!id.attributed_to) continue;
    auto it = stats_.find(*id.attributed_to);
    if (it == stats_.end()) continue;
    ++it->second.identified;
    if (id.label == Label::kDefective) {
      ++it->second.defectives;
      ++stage_defectives_;
    }
  }
}

namespace {

std::string seq_name(std::size_t seq) { return "#" + std::to_string(seq); }

bool contaminated_driver(const TestRecord& r) {
  return r.kind == TestKind::kDriver && r.status == Outcome::kContaminated;
}

}  // namespace

std::vector<Phase> segment_phases(const TranscriptView& view) {
  std::vector<Phase> phases;
  Phase cur;
  const auto& top = view.top();
  for (std::size_t i = 0; i < top.size(); ++i) {
    const TestRecord& r = view.record(top[i]);
    if (r.kind == TestKind::kAdditional) {
      if (cur.tests.size() != 6) {
        throw StructuralError("additional test " + seq_name(r.seq) + " at position " +
                              std::to_string(cur.tests.size() + 1) + " of its phase");
      }
      if (r.status == Outcome::kPure && i + 1 != top.size()) {
        throw StructuralError("pure additional test " + seq_name(r.seq) +
                              " is not the last test");
      }
    } else {
      if (!r.rank) throw StructuralError("driver " + seq_name(r.seq) + " has no rank");
      // ranks climb by one inside a phase
      for (auto it = cur.tests.rbegin(); it != cur.tests.rend(); ++it) {
        const TestRecord& prev = view.record(*it);
        if (prev.kind != TestKind::kDriver) continue;
        if (*prev.rank + 1 != *r.rank) {
          throw StructuralError("rank " + std::to_string(*r.rank) + " of " + seq_name(r.seq) +
                                " does not follow rank " + std::to_string(*prev.rank));
        }
        break;
      }
    }
    cur.tests.push_back(r.seq);
    if (contaminated_driver(r)) {
      cur.index = phases.size();
      phases.push_back(std::move(cur));
      cur = Phase{};
    }
  }
  if (!cur.tests.empty()) {
    for (std::size_t s : cur.tests) {
      if (view.record(s).status == Outcome::kContaminated) {
        throw StructuralError("final phase holds contaminated test " + seq_name(s) +
                              " but no contaminated driver");
      }
    }
    cur.index = phases.size();
    phases.push_back(std::move(cur));
  }
  return phases;
}

void measure_tuple(const TranscriptView& view, ZigZagTuple& t) {
  const auto& p = view.stats(t.pure_test);
  const auto& c = view.stats(t.cont_test);
  t.incurred = p.incurred + c.incurred + (t.extra ? view.stats(*t.extra).incurred : 0);
  t.identified = p.identified + c.identified;
  t.defectives = p.defectives + c.defectives;
  if (t.extra) {
    t.identified += view.stats(*t.extra).identified;
    t.defectives += view.stats(*t.extra).defectives;
  }
}

TupleType type_tuple(const TranscriptView& view, const ZigZagTuple& t, SizeSchedule schedule) {
  const TestRecord& p = view.record(t.pure_test);
  const TestRecord& c = view.record(t.cont_test);
  const unsigned v = t.rank;
  const bool full = c.pool.size() == schedule(v);
  auto unlisted = [&](const char* what) {
    return StructuralError(std::string("rank-") + std::to_string(v) + " tuple (" +
                           seq_name(p.seq) + ", " + seq_name(c.seq) + "): " + what);
  };
  if (c.resolver == Resolver::kSingleton && c.pool.size() == 1 && v > 0) {
    return TupleType::kDegenerate;
  }
  if (v == 1) {
    if (p.raw_outcome != Outcome::kPure) throw unlisted("rank-0 partner not pure");
    if (c.resolver == Resolver::kTwoTest && full) return TupleType::kObs3i;
    throw unlisted("rank-1 test not resolved by 2-Test");
  }
  if (v == 2) {
    const bool one_defective = p.raw_outcome == Outcome::kContaminated;
    if (!one_defective && c.resolver == Resolver::kFourSplit) {
      return full ? TupleType::kObs3ii : TupleType::kDegenerate;
    }
    if (one_defective && c.resolver == Resolver::kThreeTest) {
      if (!full) return TupleType::kDegenerate;
      switch (view.stats(c.seq).defectives) {
        case 1: return TupleType::kObs3iii;
        case 2: return TupleType::kObs3iv;
        case 3: return TupleType::kObs3v;
        default: throw unlisted("3-Test found no defective");
      }
    }
    throw unlisted(one_defective ? "{0,1} partner with a 4-Split"
                                 : "{0,0} partner with a 3-Test");
  }
  if (c.resolver != Resolver::kFourSplit) throw unlisted("not resolved by 4-Split");
  if (!full) return TupleType::kDegenerate;
  if (!c.split_part) throw unlisted("4-Split part missing");
  static constexpr TupleType kByPart[] = {TupleType::kT1, TupleType::kT2, TupleType::kT3,
                                          TupleType::kT4};
  return kByPart[*c.split_part];
}

namespace {

std::map<std::size_t, std::size_t> phase_of(const Classification& cls) {
  std::map<std::size_t, std::size_t> out;
  for (const Phase& ph : cls.phases) {
    for (std::size_t s : ph.tests) out[s] = ph.index;
  }
  return out;
}

}  // namespace

Classification classify(const TranscriptView& view, SizeSchedule schedule) {
  Classification cls;
  cls.phases = segment_phases(view);
  const auto& top = view.top();
  if (top.empty()) return cls;

  std::set<std::size_t> in_c1;
  if (!contaminated_driver(view.record(top.back()))) {
    const Phase& last = cls.phases.back();
    in_c1.insert(last.tests.begin(), last.tests.end());
    cls.c1 = last.tests;
  }

  std::vector<std::size_t> walk;
  std::vector<std::size_t> extra_pool;
  for (std::size_t s : top) {
    const TestRecord& r = view.record(s);
    if (r.kind == TestKind::kAdditional) cls.additional.push_back(s);
    if (in_c1.count(s)) continue;
    if (r.kind == TestKind::kAdditional) {
      extra_pool.push_back(s);
    } else if (*r.rank == 0 && r.status == Outcome::kContaminated) {
      cls.c2.push_back(s);
    } else {
      walk.push_back(s);
    }
  }

  std::map<unsigned, std::vector<std::size_t>> stacks;
  for (std::size_t s : walk) {
    const TestRecord& r = view.record(s);
    if (r.status == Outcome::kPure) {
      stacks[*r.rank].push_back(s);
      continue;
    }
    const unsigned v = *r.rank;
    auto& st = stacks[v - 1];
    if (st.empty()) {
      throw StructuralError("no pure rank-" + std::to_string(v - 1) + " partner for " +
                            seq_name(s));
    }
    std::size_t partner = st.back();
    st.pop_back();
    if (view.record(partner).pool.size() != schedule(v - 1)) {
      throw StructuralError("partner " + seq_name(partner) + " of " + seq_name(s) +
                            " tested " + std::to_string(view.record(partner).pool.size()) +
                            " items, not a_" + std::to_string(v - 1));
    }
    ZigZagTuple t;
    t.pure_test = partner;
    t.cont_test = s;
    t.rank = v;
    cls.tuples.push_back(t);
  }
  for (auto& [rank, st] : stacks) cls.c4.insert(cls.c4.end(), st.begin(), st.end());

  auto phases = phase_of(cls);
  std::map<std::size_t, std::size_t> extra_by_phase;
  for (std::size_t a : extra_pool) extra_by_phase[phases.at(a)] = a;
  for (ZigZagTuple& t : cls.tuples) {
    auto it = extra_by_phase.find(phases.at(t.cont_test));
    if (it != extra_by_phase.end()) t.extra = it->second;
    measure_tuple(view, t);
    t.type = type_tuple(view, t, schedule);
    cls.c3.push_back(t.pure_test);
    cls.c3.push_back(t.cont_test);
  }
  cls.c3.insert(cls.c3.end(), extra_pool.begin(), extra_pool.end());
  std::sort(cls.c3.begin(), cls.c3.end());
  std::sort(cls.c4.begin(), cls.c4.end());
  return cls;
}

bool tuples_valid(const TranscriptView& view, const Classification& cls,
                  const std::vector<ZigZagTuple>& tuples, std::vector<std::string>* why,
                  SizeSchedule schedule) {
  bool ok = true;
  auto fail = [&](std::string msg) {
    ok = false;
    if (why) why->push_back(std::move(msg));
  };
  auto phases = phase_of(cls);
  std::set<std::size_t> c2(cls.c2.begin(), cls.c2.end());
  std::multiset<std::size_t> used;
  for (const ZigZagTuple& t : tuples) {
    const std::string name = "(" + seq_name(t.pure_test) + ", " + seq_name(t.cont_test) + ")";
    if (!view.is_top(t.pure_test) || !view.is_top(t.cont_test)) {
      fail(name + " references a test outside the stage");
      continue;
    }
    const TestRecord& p = view.record(t.pure_test);
    const TestRecord& c = view.record(t.cont_test);
    if (t.rank == 0) fail(name + " has rank 0");
    if (p.kind != TestKind::kDriver || p.status != Outcome::kPure || !p.rank ||
        *p.rank + 1 != t.rank) {
      fail(name + ": first test is not a pure driver of rank v-1");
    } else if (p.pool.size() != schedule(t.rank - 1)) {
      fail(name + ": first test pool is not a_{v-1}");
    }
    if (!contaminated_driver(c) || !c.rank || *c.rank != t.rank || c2.count(c.seq)) {
      fail(name + ": second test is not a contaminated driver of rank v outside C2");
    }
    if (t.extra) {
      if (!view.is_top(*t.extra) || view.record(*t.extra).kind != TestKind::kAdditional) {
        fail(name + ": extra is not an additional test");
      } else if (phases.at(*t.extra) != phases.at(t.cont_test)) {
        fail(name + ": extra lies in another phase");
      }
      used.insert(*t.extra);
    }
    used.insert(t.pure_test);
    used.insert(t.cont_test);
  }
  std::multiset<std::size_t> want(cls.c3.begin(), cls.c3.end());
  if (used != want) fail("tuples do not cover C3 exactly once");
  return ok;
}

bool Verdict::ok() const { return first_failure() == nullptr; }

const CheckResult* Verdict::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

namespace {

CheckResult check(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void fail_once(CheckResult& c, std::string detail, std::map<std::string, double> values = {}) {
  if (!c.pass) return;
  c.pass = false;
  c.detail = std::move(detail);
  c.values = std::move(values);
}

double dbl(std::size_t v) { return static_cast<double>(v); }

// Table entries for the rank-1 and rank-2 tuple types.
bool obs3_matches(const ZigZagTuple& t) {
  switch (t.type) {
    case TupleType::kObs3i: return t.incurred == 4 && t.identified == 3 && t.defectives == 2;
    case TupleType::kObs3ii:
      return (t.incurred == 3 || t.incurred == 4) && t.identified >= 3 && t.identified <= 5 &&
             t.defectives == 1;
    case TupleType::kObs3iii: return t.incurred == 7 && t.identified == 5 && t.defectives == 2;
    case TupleType::kObs3iv: return t.incurred == 7 && t.identified == 5 && t.defectives == 3;
    case TupleType::kObs3v: return t.incurred == 7 && t.identified == 5 && t.defectives == 4;
    default: return true;
  }
}

}  // namespace

Verdict verify_observations(const TranscriptView& view, const Classification& cls) {
  Verdict out;

  CheckResult part = check("partition");
  std::vector<std::size_t> all;
  for (const auto* c : {&cls.c1, &cls.c2, &cls.c3, &cls.c4}) all.insert(all.end(), c->begin(), c->end());
  std::sort(all.begin(), all.end());
  if (all != view.top()) {
    fail_once(part, "C1..C4 are not a partition of the top-level tests",
              {{"classified", dbl(all.size())}, {"top_level", dbl(view.top().size())}});
  }
  out.add(part);

  CheckResult c1 = check("c1_size");
  if (cls.c1.size() > 7) fail_once(c1, "C1 holds more than 7 tests", {{"c1", dbl(cls.c1.size())}});
  out.add(c1);

  CheckResult c2 = check("c2_members");
  for (std::size_t s : cls.c2) {
    const TestRecord& r = view.record(s);
    if (!r.rank || *r.rank != 0 || r.status != Outcome::kContaminated) {
      fail_once(c2, seq_name(s) + " in C2 is not a contaminated rank-0 test");
    }
  }
  out.add(c2);

  CheckResult count = check("tuple_count");
  std::set<std::size_t> c3(cls.c3.begin(), cls.c3.end());
  std::size_t a_in_c3 = 0;
  for (std::size_t a : cls.additional) a_in_c3 += c3.count(a);
  if (2 * cls.tuples.size() != cls.c3.size() - a_in_c3) {
    fail_once(count, "tuple count differs from (|C3| - |A|)/2",
              {{"tuples", dbl(cls.tuples.size())},
               {"c3", dbl(cls.c3.size())},
               {"additional_in_c3", dbl(a_in_c3)}});
  }
  out.add(count);

  CheckResult valid = check("tuple_validity");
  std::vector<std::string> why;
  if (!tuples_valid(view, cls, cls.tuples, &why)) fail_once(valid, why.front());
  out.add(valid);

  CheckResult ranks = check("c4_ranks");
  std::vector<unsigned> r4;
  for (std::size_t s : cls.c4) {
    const TestRecord& r = view.record(s);
    if (r.status != Outcome::kPure) fail_once(ranks, seq_name(s) + " in C4 is not pure");
    r4.push_back(r.rank.value_or(0));
  }
  std::sort(r4.begin(), r4.end());
  for (std::size_t i = 0; i < r4.size(); ++i) {
    if (r4[i] != i) {
      fail_once(ranks, "C4 ranks are not 0, 1, ..., r''", {{"position", dbl(i)}, {"rank", r4[i]}});
    }
  }
  out.add(ranks);

  CheckResult gap = check("c4_gap");
  std::optional<unsigned> top_cont;
  for (const ZigZagTuple& t : cls.tuples) top_cont = std::max(top_cont.value_or(0), t.rank);
  if (!r4.empty() && top_cont && r4.back() + 2 > *top_cont) {
    fail_once(gap, "r(T'') + 2 exceeds the top contaminated rank in C3",
              {{"r_c4", r4.back()}, {"r_c3", *top_cont}});
  }
  out.add(gap);

  CheckResult phases = check("phase_count");
  if (cls.phases.size() > view.stage_defectives() + 1) {
    fail_once(phases, "more phases than defectives + 1",
              {{"phases", dbl(cls.phases.size())}, {"defectives", dbl(view.stage_defectives())}});
  }
  out.add(phases);

  CheckResult extra = check("additional_tests");
  for (const Phase& ph : cls.phases) {
    std::size_t n = 0;
    for (std::size_t s : ph.tests) {
      const TestRecord& r = view.record(s);
      if (r.kind != TestKind::kAdditional) continue;
      ++n;
      if (s != view.top().back() && r.raw_outcome != Outcome::kContaminated) {
        fail_once(extra, "additional test " + seq_name(s) + " before the end is pure");
      }
    }
    if (n > 1) fail_once(extra, "phase " + std::to_string(ph.index) + " has several additional tests");
  }
  out.add(extra);

  CheckResult table = check("tuple_types");
  for (const ZigZagTuple& t : cls.tuples) {
    std::map<std::string, double> vals{{"rank", t.rank},
                                       {"incurred", dbl(t.incurred)},
                                       {"identified", dbl(t.identified)},
                                       {"defectives", dbl(t.defectives)}};
    if (!obs3_matches(t)) {
      fail_once(table, std::string("tuple ") + to_string(t.type) + " at " +
                           seq_name(t.cont_test) + " leaves its table entry", vals);
    }
    if (t.rank >= 3 && t.type != TupleType::kDegenerate) {
      const std::size_t unit = std::size_t{1} << (t.rank - 3);
      const std::size_t extra_cost = t.extra ? view.stats(*t.extra).incurred : 0;
      std::size_t max_tests = extra_cost + t.rank + (t.type == TupleType::kT1 ? 1 : 2);
      std::size_t mult = t.type == TupleType::kT1   ? 3
                         : t.type == TupleType::kT2 ? 5
                         : t.type == TupleType::kT3 ? 7
                                                    : 8;
      if (t.incurred > max_tests || t.identified < mult * unit + 1) {
        fail_once(table, std::string("tuple ") + to_string(t.type) + " at " +
                             seq_name(t.cont_test) + " breaks its test/size bounds", vals);
      }
    }
  }
  out.add(table);
  return out;
}

Verdict check_class_bounds(const TranscriptView& view, const Classification& cls) {
  Verdict out;
  auto sum = [&](const std::vector<std::size_t>& tests) {
    TranscriptView::Stats s{0, 0, 0};
    for (std::size_t t : tests) {
      const auto& x = view.stats(t);
      s.incurred += x.incurred;
      s.identified += x.identified;
      s.defectives += x.defectives;
    }
    return s;
  };
  const auto s1 = sum(cls.c1), s2 = sum(cls.c2), s3 = sum(cls.c3), s4 = sum(cls.c4);

  CheckResult l9 = check("lemma9_c1");
  if (s1.incurred > 7) fail_once(l9, "C1 incurs more than 7 tests", {{"incurred", dbl(s1.incurred)}});
  out.add(l9);

  CheckResult l10 = check("lemma10_c2");
  for (std::size_t t : cls.c2) {
    const auto& x = view.stats(t);
    double rhs = competitive_term(dbl(x.identified), 1.0);
    if (!(dbl(x.incurred) < rhs)) {
      fail_once(l10, seq_name(t) + " in C2 exceeds its bound",
                {{"incurred", dbl(x.incurred)}, {"identified", dbl(x.identified)}, {"bound", rhs}});
    }
  }
  out.add(l10);

  CheckResult l11 = check("lemma11_tuples");
  for (const ZigZagTuple& t : cls.tuples) {
    double rhs = competitive_term(dbl(t.identified), dbl(t.defectives));
    if (t.defectives == 0 || !within(dbl(t.incurred), rhs)) {
      fail_once(l11, std::string("tuple ") + to_string(t.type) + " at " + seq_name(t.cont_test) +
                         " exceeds its bound",
                {{"rank", t.rank},
                 {"incurred", dbl(t.incurred)},
                 {"identified", dbl(t.identified)},
                 {"defectives", dbl(t.defectives)},
                 {"bound", rhs}});
    }
  }
  out.add(l11);

  CheckResult l12 = check("lemma12_c2c3");
  {
    double lhs = dbl(s2.incurred + s3.incurred);
    double d = dbl(s2.defectives + s3.defectives);
    double rhs = competitive_term(dbl(s2.identified + s3.identified), d);
    if (!within(lhs, rhs)) {
      fail_once(l12, "C2 and C3 together exceed their bound",
                {{"incurred", lhs}, {"defectives", d}, {"bound", rhs}});
    }
  }
  out.add(l12);

  CheckResult l13 = check("lemma13_c2c3c4");
  {
    double d = dbl(s2.defectives + s3.defectives + s4.defectives);
    if (d >= 3) {
      double lhs = dbl(s2.incurred + s3.incurred + s4.incurred);
      double n = dbl(s2.identified + s3.identified + s4.identified);
      double rhs = competitive_term(n, d) + 16.0;
      if (!within(lhs, rhs)) {
        fail_once(l13, "C2, C3 and C4 together exceed their bound",
                  {{"incurred", lhs}, {"identified", n}, {"defectives", d}, {"bound", rhs}});
      }
    }
  }
  out.add(l13);

  CheckResult eq = check("recomposition");
  std::size_t total = s1.incurred + s2.incurred + s3.incurred + s4.incurred;
  if (total != view.stage_records()) {
    fail_once(eq, "class totals do not add up to the stage's test count",
              {{"classes", dbl(total)}, {"records", dbl(view.stage_records())}});
  }
  out.add(eq);
  return out;
}

RunAnalysis analyze(const Transcript& transcript, Stage stage, SizeSchedule schedule) {
  RunAnalysis out;
  try {
    TranscriptView view(transcript, stage);
    if (view.top().empty()) return out;
    Classification cls = classify(view, schedule);
    for (auto& c : verify_observations(view, cls).checks) out.verdict.add(std::move(c));
    for (auto& c : check_class_bounds(view, cls).checks) out.verdict.add(std::move(c));
    out.classification = std::move(cls);
  } catch (const StructuralError& e) {
    CheckResult c;
    c.name = "structure";
    c.pass = false;
    c.detail = e.what();
    out.verdict.add(std::move(c));
  }
  return out;
}

}  // namespace gtlab
