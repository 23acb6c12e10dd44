// SPDX-License-Identifier: Apache-2.0
#include "resolute/eval/report.hpp"

#include <cstdio>
#include <fstream>

namespace resolute::eval {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

}  // namespace

ordered_json metrics_to_json(const Metrics& metrics) {
  ordered_json out;
  out["n_problems"] = metrics.n_problems;
  out["skipped"] = metrics.skipped;
  out["accuracy"] = metrics.accuracy;
  out["execution_rate"] = metrics.execution_rate;
  if (metrics.execution_accuracy.has_value())
    out["execution_accuracy"] = *metrics.execution_accuracy;
  else
    out["execution_accuracy"] = nullptr;
  out["per_round"] = {{"accuracy", metrics.per_round_accuracy},
                      {"corrected", metrics.corrected_per_round},
                      {"reverted", metrics.reverted_per_round}};
  return out;
}

Result<Metrics, std::string> metrics_from_json(const json& value) {
  if (!value.is_object()) return std::string("not a JSON object");
  Metrics m;
  try {
    m.n_problems = value.at("n_problems").get<std::size_t>();
    m.skipped = value.at("skipped").get<std::size_t>();
    m.accuracy = value.at("accuracy").get<double>();
    m.execution_rate = value.at("execution_rate").get<double>();
    if (!value.at("execution_accuracy").is_null())
      m.execution_accuracy = value.at("execution_accuracy").get<double>();
    const json& per_round = value.at("per_round");
    m.per_round_accuracy =
        per_round.at("accuracy").get<std::vector<double>>();
    m.corrected_per_round =
        per_round.at("corrected").get<std::vector<std::size_t>>();
    m.reverted_per_round =
        per_round.at("reverted").get<std::vector<std::size_t>>();
  } catch (const json::exception& e) {
    return std::string("malformed metrics: ") + e.what();
  }
  return m;
}

Result<bool, std::string> emit_report(const Metrics& metrics,
                                      const std::vector<agents::RunRecord>& records,
                                      const std::filesystem::path& out_dir,
                                      const ordered_json& provenance) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    return "cannot create output directory " + out_dir.string() + ": " +
           ec.message();

  ordered_json report = metrics_to_json(metrics);
  if (!provenance.is_null()) report["config"] = provenance;
  {
    std::ofstream out(out_dir / "report.json");
    if (!out.is_open())
      return "cannot write " + (out_dir / "report.json").string();
    out << report.dump(2) << "\n";
    if (!out.good())
      return "write failed: " + (out_dir / "report.json").string();
  }

  {
    std::ofstream out(out_dir / "per_round.csv");
    if (!out.is_open())
      return "cannot write " + (out_dir / "per_round.csv").string();
    out << "round,accuracy,corrected,reverted\n";
    for (std::size_t k = 0; k < metrics.per_round_accuracy.size(); ++k) {
      char accuracy[32];
      std::snprintf(accuracy, sizeof(accuracy), "%.6f",
                    metrics.per_round_accuracy[k]);
      out << k << "," << accuracy << "," << metrics.corrected_per_round[k]
          << "," << metrics.reverted_per_round[k] << "\n";
    }
    if (!out.good())
      return "write failed: " + (out_dir / "per_round.csv").string();
  }

  auto saved = agents::save_records(records, out_dir / "records.jsonl");
  if (!saved.has_value()) return saved.error();
  return true;
}

}  // namespace resolute::eval
