#include "gtlab/harness.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

#include "gtlab/analysis.h"
#include "gtlab/bounds.h"
#include "gtlab/symmetric.h"
#include "gtlab/upzigzag.h"
#include "gtlab/zigzag.h"

namespace gtlab {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kIndividual: return "individual";
    case Algorithm::kZd: return "zd";
    case Algorithm::kZu: return "zu";
    case Algorithm::kZc: return "zc";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : all_algorithms()) {
    if (name == to_string(a)) return a;
  }
  throw UsageError("unknown algorithm '" + name + "' (expected individual, zd, zu or zc)");
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> kAll{Algorithm::kIndividual, Algorithm::kZd,
                                           Algorithm::kZu, Algorithm::kZc};
  return kAll;
}

RunResult run_individual(const Instance& instance) {
  TestSession session(instance);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    Item item = static_cast<Item>(i);
    std::size_t seq = session.test(std::span<const Item>(&item, 1), TestTag{});
    bool bad = session.outcome(seq) == Outcome::kContaminated;
    session.identify(item, bad ? Label::kDefective : Label::kGood, seq, true);
  }
  return make_result("individual", std::move(session));
}

RunResult run_algorithm(Algorithm alg, const Instance& instance, const RunOptions& options) {
  switch (alg) {
    case Algorithm::kIndividual: return run_individual(instance);
    case Algorithm::kZd: return run_zd(instance, options);
    case Algorithm::kZu: return run_zu(instance, options);
    case Algorithm::kZc: return run_zc(instance, options);
  }
  throw UsageError("unknown algorithm");
}

unsigned default_workers() {
  if (const char* env = std::getenv("GTLAB_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool WorstCaseCell::ok() const {
  if (!run_failures.empty()) return false;
  return std::all_of(bounds.begin(), bounds.end(),
                     [](const BoundCheck& b) { return b.pass || !b.asserted; });
}

std::size_t GridReport::violation_count() const {
  std::size_t v = 0;
  for (const WorstCaseCell& c : cells) {
    for (const BoundCheck& b : c.bounds) v += (!b.pass && b.asserted) ? 1 : 0;
    for (const auto& [name, count] : c.run_failures) v += count;
  }
  return v;
}

namespace {

std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t u = x & (~x + 1);
  std::uint64_t v = x + u;
  return v + (((v ^ x) / u) >> 2);
}

BoundCheck upper(const std::string& name, double value, std::size_t worst, bool asserted = true) {
  return {name, value, within(static_cast<double>(worst), value), asserted};
}

// Per-worker accumulator; merged by max / sum, independent of scheduling.
struct Partial {
  std::size_t worst = 0;
  std::uint64_t worst_index = UINT64_MAX;
  std::vector<Item> argmax;
  std::uint64_t runs = 0;
  std::map<std::string, std::uint64_t> failures;
  // (enumeration index, violation) so the kept examples do not depend on
  // the worker split
  std::vector<std::pair<std::uint64_t, Violation>> examples;
};

void note_failure(Partial& p, std::uint64_t index, Violation v) {
  ++p.failures[v.check];
  p.examples.emplace_back(index, std::move(v));
}

void run_one(Algorithm alg, const Instance& instance, std::uint64_t index,
             const WorstCaseOptions& opt, Partial& p) {
  Violation base;
  base.algorithm = alg;
  base.n = instance.size();
  base.defectives = instance.defectives();

  RunResult result;
  std::optional<ZcPlan> plan;
  try {
    if (alg == Algorithm::kZc) {
      ZcRun zc = run_zc_detailed(instance, opt.run);
      result = std::move(zc.result);
      plan = zc.plan;
    } else {
      result = run_algorithm(alg, instance, opt.run);
    }
    finalize(result, instance);
  } catch (const std::exception& e) {
    Violation v = base;
    v.check = "correctness";
    v.detail = e.what();
    throw RunFailure(std::string(to_string(alg)) + " failed on n=" +
                         std::to_string(instance.size()) + ": " + e.what(),
                     v);
  }
  ++p.runs;
  // indices reach a worker in increasing order, so strict > keeps the first
  if (p.worst_index == UINT64_MAX || result.tests_used > p.worst) {
    p.worst = result.tests_used;
    p.worst_index = index;
    p.argmax = instance.defectives();
  }
  if (!opt.per_run_checks) return;
  if (plan && !zc_quarter_condition(*plan)) {
    Violation v = base;
    v.check = "zc_quarter";
    v.detail = "Z^d branch entered with fewer than 3/4 of the round items cleared";
    v.values = {{"group_goods", static_cast<double>(plan->group_goods)},
                {"n1", static_cast<double>(plan->n1)}};
    note_failure(p, index, std::move(v));
  }
  if (alg == Algorithm::kZu || alg == Algorithm::kZc) {
    RunAnalysis a = analyze(result.transcript, Stage::kZu, opt.run.schedule);
    for (const CheckResult& c : a.verdict.checks) {
      if (c.pass) continue;
      Violation v = base;
      v.check = c.name;
      v.detail = c.detail;
      v.values = c.values;
      note_failure(p, index, std::move(v));
    }
  }
}

void merge(Partial& into, Partial&& from) {
  if (from.worst_index != UINT64_MAX &&
      (into.worst_index == UINT64_MAX || from.worst > into.worst ||
       (from.worst == into.worst && from.worst_index < into.worst_index))) {
    into.worst = from.worst;
    into.worst_index = from.worst_index;
    into.argmax = std::move(from.argmax);
  }
  into.runs += from.runs;
  for (auto& [k, v] : from.failures) into.failures[k] += v;
  for (auto& e : from.examples) into.examples.push_back(std::move(e));
}

}  // namespace

std::vector<BoundCheck> cell_bounds(Algorithm alg, std::size_t n, std::size_t d,
                                    std::size_t worst) {
  std::vector<BoundCheck> out;
  const double w = static_cast<double>(worst);
  if (d <= n) {
    double info = static_cast<double>(info_lower_bound(n, d));
    out.push_back({"info_lower", info, w >= info, true});
  }
  switch (alg) {
    case Algorithm::kIndividual:
      out.push_back({"individual_n", static_cast<double>(n), worst == n, true});
      break;
    case Algorithm::kZd:
      if (d == 0) {
        out.push_back({"zd_d0", 1.0, worst == 1 || n == 0, true});
      } else if (auto b = zd_upper(n, d); b.applicable) {
        out.push_back(upper("lemma2_zd", b.value, worst));
      }
      break;
    case Algorithm::kZu: {
      // worst <= 1.4 n compared in integers: 10 worst <= 14 n
      out.push_back({"lemma5_zu_1.4n", 1.4 * static_cast<double>(n), 10 * worst <= 14 * n, true});
      if (auto b = zu_upper_d(n, d); b.applicable) out.push_back(upper("lemma4_zu", b.value, worst));
      break;
    }
    case Algorithm::kZc: {
      out.push_back(upper("lemma6ii_zc", zc_upper_n(n).value, worst));
      if (auto b = zc_upper_d(n, d, 32); b.applicable) out.push_back(upper("lemma6i_zc_32", b.value, worst));
      if (auto b = zc_upper_d(n, d, 23); b.applicable) {
        out.push_back(upper("lemma6i_zc_23", b.value, worst, false));
      }
      Theorem2Verdict t = theorem2_check(n, d, worst);
      if (t.applicable) {
        out.push_back({std::string("theorem2_") + t.component, t.limit, t.pass, t.asserted});
      }
      break;
    }
  }
  return out;
}

WorstCaseCell worst_case(Algorithm alg, std::size_t n, std::size_t d,
                         const WorstCaseOptions& opt) {
  if (d > n) throw UsageError("d > n");
  if (n > 63) throw UsageError("worst_case supports n <= 63");
  WorstCaseCell cell;
  cell.algorithm = alg;
  cell.n = n;
  cell.d = d;
  cell.exhaustive = opt.exhaustive;

  Partial total;
  if (opt.exhaustive) {
    const double count = std::exp2(log2_binomial(n, d));
    if (count > static_cast<double>(opt.cap) + 0.5) {
      throw UsageError("C(" + std::to_string(n) + "," + std::to_string(d) +
                       ") exceeds the exhaustive cap " + std::to_string(opt.cap));
    }
    const std::uint64_t runs = static_cast<std::uint64_t>(count + 0.5);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(opt.workers ? opt.workers : default_workers(), runs));
    std::vector<Partial> parts(std::max(1U, workers));
    std::vector<std::exception_ptr> errors(parts.size());
    auto work = [&](unsigned w) {
      try {
        std::uint64_t mask = d == 0 ? 0 : (std::uint64_t{1} << d) - 1;
        for (std::uint64_t k = 0; k < runs; ++k) {
          if (k % parts.size() == w) run_one(alg, Instance::from_mask(n, mask), k, opt, parts[w]);
          if (d > 0 && k + 1 < runs) mask = next_combination(mask);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (parts.size() == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < parts.size(); ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& p : parts) merge(total, std::move(p));
  } else {
    std::mt19937_64 rng(opt.seed);
    std::vector<Item> perm(n);
    for (std::uint64_t k = 0; k < opt.samples; ++k) {
      for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Item>(i);
      for (std::size_t i = 0; i < d; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
      }
      run_one(alg, Instance(n, std::vector<Item>(perm.begin(), perm.begin() + d)), k, opt, total);
    }
  }

  cell.runs = total.runs;
  cell.worst_tests = total.worst;
  cell.argmax = total.argmax;
  cell.run_failures = total.failures;
  std::sort(total.examples.begin(), total.examples.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<std::string, std::size_t> kept;
  for (auto& [index, v] : total.examples) {
    if (kept[v.check]++ < opt.max_examples) cell.examples.push_back(std::move(v));
  }
  cell.bounds = cell_bounds(alg, n, d, cell.worst_tests);
  if (!opt.exhaustive) {
    for (BoundCheck& b : cell.bounds) b.asserted = false;
  }
  return cell;
}

GridReport verify_grid(std::size_t n_max, const std::vector<Algorithm>& algorithms,
                       const WorstCaseOptions& options) {
  if (n_max > 20) throw UsageError("verify_grid: n_max must be <= 20");
  GridReport report;
  report.n_max = n_max;
  WorstCaseOptions opt = options;
  opt.exhaustive = true;
  for (Algorithm alg : algorithms) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t d = 0; d <= n; ++d) report.cells.push_back(worst_case(alg, n, d, opt));
    }
  }
  return report;
}

}  // namespace gtlab
