// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "resolute/agents/record.hpp"
#include "resolute/eval/metrics.hpp"
#include "resolute/result.hpp"

namespace resolute::eval {

// JSON shape used inside report.json; metrics_from_json inverts it.
nlohmann::ordered_json metrics_to_json(const Metrics& metrics);
Result<Metrics, std::string> metrics_from_json(const nlohmann::json& value);

// Writes three files into `out_dir` (created if missing):
//   report.json    full metrics plus the provenance block, if any
//   per_round.csv  header round,accuracy,corrected,reverted + one row
//                  per round index
//   records.jsonl  the run records verbatim
// `provenance` is embedded under "config" when non-null (callers pass the
// resolved run configuration, credentials already excluded by design).
Result<bool, std::string> emit_report(const Metrics& metrics,
                                      const std::vector<agents::RunRecord>& records,
                                      const std::filesystem::path& out_dir,
                                      const nlohmann::ordered_json& provenance);

}  // namespace resolute::eval
