#include "gtlab/json_io.h"

#include <charconv>
#include <sstream>

namespace gtlab {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

json to_json(const Instance& instance) {
  return json{{"n", instance.size()}, {"defectives", instance.defectives()}};
}

json to_json(const TestRecord& r) {
  json j{{"seq", r.seq},
         {"pool", r.pool},
         {"raw_outcome", to_string(r.raw_outcome)},
         {"status", to_string(r.status)},
         {"kind", to_string(r.kind)},
         {"stage", to_string(r.stage)},
         {"sub", to_string(r.sub)},
         {"resolver", to_string(r.resolver)}};
  j["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  j["parent"] = r.parent ? json(*r.parent) : json(nullptr);
  j["split_part"] = r.split_part ? json(*r.split_part) : json(nullptr);
  return j;
}

json to_json(const Transcript& t) {
  json records = json::array();
  for (const TestRecord& r : t.records) records.push_back(to_json(r));
  json ids = json::array();
  for (const Identification& id : t.identifications) {
    ids.push_back({{"item", id.item},
                   {"label", to_string(id.label)},
                   {"attributed_to", id.attributed_to ? json(*id.attributed_to) : json(nullptr)},
                   {"via_test", id.via_test}});
  }
  return json{{"records", records}, {"identifications", ids}};
}

json to_json(const RunResult& run, bool with_transcript) {
  json labels = json::array();
  for (const auto& l : run.classified) labels.push_back(l ? json(to_string(*l)) : json(nullptr));
  json j{{"algorithm", run.algorithm}, {"tests_used", run.tests_used}, {"labels", labels}};
  if (with_transcript) j["transcript"] = to_json(run.transcript);
  return j;
}

json to_json(const BoundReport& b) {
  return json{{"name", b.name},
              {"n", b.n},
              {"d", b.d},
              {"value", b.applicable ? json(b.value) : json(nullptr)},
              {"applicable", b.applicable},
              {"direction", b.direction == Direction::kLower ? "lower" : "upper"}};
}

json to_json(const Verdict& v) {
  json checks = json::array();
  for (const CheckResult& c : v.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"values", c.values}});
  }
  return json{{"ok", v.ok()}, {"checks", checks}};
}

json to_json(const Violation& v) {
  return json{{"check", v.check},
              {"algorithm", to_string(v.algorithm)},
              {"n", v.n},
              {"defectives", v.defectives},
              {"detail", v.detail},
              {"values", v.values}};
}

json to_json(const WorstCaseCell& c) {
  json bounds = json::array();
  for (const BoundCheck& b : c.bounds) {
    bounds.push_back({{"name", b.name}, {"value", b.value}, {"pass", b.pass}, {"asserted", b.asserted}});
  }
  json examples = json::array();
  for (const Violation& v : c.examples) examples.push_back(to_json(v));
  return json{{"algorithm", to_string(c.algorithm)},
              {"n", c.n},
              {"d", c.d},
              {"mode", c.exhaustive ? "exhaustive" : "sampled"},
              {"estimate", c.exhaustive ? "exact" : "lower"},
              {"runs", c.runs},
              {"worst_tests", c.worst_tests},
              {"argmax", c.argmax},
              {"bounds", bounds},
              {"run_failures", c.run_failures},
              {"examples", examples},
              {"ok", c.ok()}};
}

json to_json(const GridReport& r) {
  json cells = json::array();
  for (const WorstCaseCell& c : r.cells) cells.push_back(to_json(c));
  return json{{"schema", kReportSchema},
              {"n_max", r.n_max},
              {"violations", r.violation_count()},
              {"ok", r.ok()},
              {"cells", cells}};
}

json counterexample(const Violation& v, const RunOptions& options) {
  Instance instance(v.n, v.defectives);
  json transcript;
  try {
    transcript = to_json(run_algorithm(v.algorithm, instance, options).transcript);
  } catch (const std::exception& e) {
    transcript = json{{"error", e.what()}};
  }
  return json{{"instance", to_json(instance)},
              {"algorithm", to_string(v.algorithm)},
              {"transcript", transcript},
              {"failed_check", v.check},
              {"detail", v.detail},
              {"values", v.values}};
}

namespace {

void csv_rows(std::ostringstream& out, const WorstCaseCell& c) {
  std::string prefix = std::string(to_string(c.algorithm)) + "," + std::to_string(c.n) + "," +
                       std::to_string(c.d) + "," + std::to_string(c.worst_tests) + ",";
  if (c.bounds.empty()) {
    out << prefix << ",," << (c.ok() ? "true" : "false") << "\n";
  }
  for (const BoundCheck& b : c.bounds) {
    out << prefix << b.name << "," << format_double(b.value) << "," << (b.pass ? "true" : "false")
        << "\n";
  }
}

}  // namespace

std::string to_csv(const WorstCaseCell& cell, bool header) {
  std::ostringstream out;
  if (header) out << kCsvHeader << "\n";
  csv_rows(out, cell);
  return out.str();
}

std::string to_csv(const GridReport& report) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const WorstCaseCell& c : report.cells) csv_rows(out, c);
  return out.str();
}

}  // namespace gtlab
