// gtlab: run, enumerate and verify the group-testing procedures.
// Exit status: 0 ok, 1 check violation, 2 usage error or refused input.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtlab/analysis.h"
#include "gtlab/bounds.h"
#include "gtlab/harness.h"
#include "gtlab/json_io.h"
#include "gtlab/minimax.h"
#include "gtlab/symmetric.h"

namespace {

using gtlab::Algorithm;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

std::vector<gtlab::Item> parse_items(const std::string& s) {
  std::vector<gtlab::Item> out;
  for (const std::string& tok : split_list(s)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw gtlab::UsageError("bad defective index '" + tok + "'");
    out.push_back(static_cast<gtlab::Item>(v));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gtlab::UsageError("cannot write " + path);
  out << text;
}

struct RunArgs {
  std::string alg = "zu";
  std::size_t n = 0;
  std::string defectives;
  std::size_t d_random = 0;
  std::uint64_t seed = 0;
  bool emit_transcript = false;
};

int cmd_run(const RunArgs& a, bool random_d) {
  Algorithm alg = gtlab::parse_algorithm(a.alg);
  std::vector<gtlab::Item> defs;
  if (random_d) {
    if (a.d_random > a.n) throw gtlab::UsageError("--d-random exceeds --n");
    std::vector<gtlab::Item> all(a.n);
    for (std::size_t i = 0; i < a.n; ++i) all[i] = static_cast<gtlab::Item>(i);
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.d_random; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, a.n - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    defs.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(a.d_random));
  } else {
    defs = parse_items(a.defectives);
  }
  gtlab::Instance instance(a.n, defs);

  gtlab::RunResult run;
  json plan;
  if (alg == Algorithm::kZc) {
    gtlab::ZcRun zc = gtlab::run_zc_detailed(instance);
    run = std::move(zc.result);
    plan = {{"n1", zc.plan.n1},
            {"nR1", zc.plan.nR1},
            {"alpha1", zc.plan.alpha1},
            {"branch", zc.plan.branch == gtlab::ZcBranch::kZd   ? "zd"
                       : zc.plan.branch == gtlab::ZcBranch::kZu ? "zu"
                                                                : "none"},
            {"quarter_condition", gtlab::zc_quarter_condition(zc.plan)}};
    if (zc.plan.n2) plan["n2"] = *zc.plan.n2;
    if (zc.plan.nR2) plan["nR2"] = *zc.plan.nR2;
    if (zc.plan.alpha2) plan["alpha2"] = *zc.plan.alpha2;
  } else {
    run = gtlab::run_algorithm(alg, instance);
  }

  json out{{"instance", gtlab::to_json(instance)}};
  bool ok = true;
  try {
    gtlab::finalize(run, instance);
    out["correct"] = true;
  } catch (const std::exception& e) {
    out["correct"] = false;
    out["error"] = e.what();
    ok = false;
  }
  out["run"] = gtlab::to_json(run, a.emit_transcript);
  if (!plan.is_null()) out["plan"] = plan;
  if (alg == Algorithm::kZu || alg == Algorithm::kZc) {
    gtlab::RunAnalysis an = gtlab::analyze(run.transcript);
    out["analysis"] = gtlab::to_json(an.verdict);
    ok = ok && an.verdict.ok();
  }
  out["ok"] = ok;
  emit(out);
  return ok ? kOk : kViolation;
}

int report_cells(const std::vector<gtlab::WorstCaseCell>& cells, bool ok, json body,
                 const std::string& out_path, const std::string& csv) {
  json dumps = json::array();
  for (const gtlab::WorstCaseCell& c : cells) {
    for (const gtlab::Violation& v : c.examples) {
      if (dumps.size() < 5) dumps.push_back(gtlab::counterexample(v));
    }
  }
  body["counterexamples"] = dumps;
  if (!out_path.empty()) {
    write_file(out_path, csv);
    emit(json{{"ok", ok}, {"out", out_path}, {"counterexamples", dumps}});
  } else {
    emit(body);
  }
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive group testing: procedures, worst cases and bound checks"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "run one instance");
  run->add_option("--alg", run_args.alg, "individual | zd | zu | zc")->required();
  run->add_option("--n", run_args.n, "number of items")->required();
  auto* defs_opt = run->add_option("--defectives", run_args.defectives, "comma-separated indices");
  auto* drand_opt = run->add_option("--d-random", run_args.d_random, "draw this many defectives");
  run->add_option("--seed", run_args.seed, "seed for --d-random");
  run->add_flag("--emit-transcript", run_args.emit_transcript, "include the full transcript");
  defs_opt->excludes(drand_opt);

  std::string wc_alg = "zu";
  std::size_t wc_n = 0, wc_d = 0, wc_samples = 1000;
  std::uint64_t wc_seed = 0;
  std::string wc_mode = "exhaustive", wc_out;
  auto* wc = app.add_subcommand("worstcase", "worst case of one (n, d) cell");
  wc->add_option("--alg", wc_alg)->required();
  wc->add_option("--n", wc_n)->required();
  wc->add_option("--d", wc_d)->required();
  wc->add_option("--mode", wc_mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  wc->add_option("--samples", wc_samples, "sampled mode run count");
  wc->add_option("--seed", wc_seed, "sampled mode seed");
  wc->add_option("--out", wc_out, "write CSV here instead of JSON to stdout");

  std::size_t v_nmax = 12;
  std::string v_algs = "individual,zd,zu,zc", v_out;
  auto* verify = app.add_subcommand("verify", "exhaustive grid with all bound checks");
  verify->add_option("--n-max", v_nmax, "largest n (<= 20)");
  verify->add_option("--algs", v_algs, "comma-separated algorithms");
  verify->add_option("--out", v_out, "write CSV here instead of JSON to stdout");

  std::size_t o_n = 0, o_d = 0;
  auto* oracle = app.add_subcommand("oracle", "exact M(d, n) for tiny instances");
  oracle->add_option("--n", o_n)->required();
  oracle->add_option("--d", o_d)->required();

  std::size_t b_n = 0, b_d = 0;
  double b_rho = gtlab::kDefaultRho;
  auto* bounds = app.add_subcommand("bounds", "evaluate every bound at (n, d)");
  bounds->add_option("--n", b_n)->required();
  bounds->add_option("--d", b_d)->required();
  bounds->add_option("--rho", b_rho);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*run) {
      if (defs_opt->count() == 0 && drand_opt->count() == 0) {
        throw gtlab::UsageError("run needs --defectives or --d-random");
      }
      return cmd_run(run_args, drand_opt->count() != 0);
    }
    if (*wc) {
      gtlab::WorstCaseOptions opt;
      opt.exhaustive = wc_mode == "exhaustive";
      opt.samples = wc_samples;
      opt.seed = wc_seed;
      gtlab::WorstCaseCell cell = gtlab::worst_case(gtlab::parse_algorithm(wc_alg), wc_n, wc_d, opt);
      json body = gtlab::to_json(cell);
      return report_cells({cell}, cell.ok(), body, wc_out, gtlab::to_csv(cell));
    }
    if (*verify) {
      std::vector<Algorithm> algs;
      for (const std::string& s : split_list(v_algs)) algs.push_back(gtlab::parse_algorithm(s));
      if (algs.empty()) throw gtlab::UsageError("--algs is empty");
      gtlab::GridReport report = gtlab::verify_grid(v_nmax, algs);
      return report_cells(report.cells, report.ok(), gtlab::to_json(report), v_out,
                          gtlab::to_csv(report));
    }
    if (*oracle) {
      gtlab::MinimaxStats stats;
      std::uint64_t m = gtlab::minimax_m(o_n, o_d, {}, &stats);
      emit(json{{"n", o_n},
                {"d", o_d},
                {"m", m},
                {"states", stats.states},
                {"info_lower", gtlab::info_lower_bound(o_n, o_d)}});
      return kOk;
    }
    if (*bounds) {
      json values = json::object();
      for (const gtlab::BoundReport& b : gtlab::all_bounds(b_n, b_d, b_rho)) {
        values[b.name] = gtlab::to_json(b);
      }
      emit(json{{"n", b_n}, {"d", b_d}, {"rho", b_rho}, {"bounds", values}});
      return kOk;
    }
  } catch (const gtlab::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const gtlab::RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const gtlab::RunFailure& e) {
    emit(json{{"ok", false}, {"counterexample", gtlab::counterexample(e.violation())}});
    return kViolation;
  }
  return kUsage;
}
