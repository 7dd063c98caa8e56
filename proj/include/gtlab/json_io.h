#pragma once

// JSON and CSV encodings of transcripts, cells and reports. Keys are emitted
// in sorted order so identical inputs give byte-identical output.
//
// Report schema version: kReportSchema. CSV header: kCsvHeader.

#include <json.hpp>
#include <string>

#include "gtlab/analysis.h"
#include "gtlab/bounds.h"
#include "gtlab/core.h"
#include "gtlab/harness.h"

namespace gtlab {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kCsvHeader = "algorithm,n,d,worst_tests,bound_name,bound_value,pass";

nlohmann::json to_json(const Instance& instance);
nlohmann::json to_json(const TestRecord& record);
nlohmann::json to_json(const Transcript& transcript);
nlohmann::json to_json(const RunResult& run, bool with_transcript);
nlohmann::json to_json(const BoundReport& bound);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const WorstCaseCell& cell);
nlohmann::json to_json(const GridReport& report);

// {instance, transcript, failed_check, values}; reruns the instance to
// recover the transcript.
nlohmann::json counterexample(const Violation& violation, const RunOptions& options = {});

// One row per (cell, bound) under kCsvHeader; a cell without bounds gets a
// single row with empty bound fields.
std::string to_csv(const GridReport& report);
std::string to_csv(const WorstCaseCell& cell, bool header = true);

// Shortest round-trip decimal for a double.
std::string format_double(double v);

}  // namespace gtlab
