// SPDX-License-Identifier: Apache-2.0
#include "resolute/eval/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace resolute::eval {

namespace {

using nlohmann::json;

// Reads one required string field; returns false and sets `error` on a
// missing or mistyped field.
bool read_string(const json& object, const char* name, std::string& out,
                 std::string& error) {
  auto it = object.find(name);
  if (it == object.end()) {
    error = std::string("missing field '") + name + "'";
    return false;
  }
  if (!it->is_string()) {
    error = std::string("field '") + name + "' has the wrong type";
    return false;
  }
  out = it->get<std::string>();
  return true;
}

}  // namespace

std::string_view dataset_format_name(DatasetFormat f) {
  switch (f) {
    case DatasetFormat::FolioJsonl:
      return "folio-jsonl";
    case DatasetFormat::ProofwriterOwaJsonl:
      return "proofwriter-owa-jsonl";
  }
  return "folio-jsonl";
}

std::optional<DatasetFormat> dataset_format_from_name(std::string_view name) {
  if (name == "folio-jsonl") return DatasetFormat::FolioJsonl;
  if (name == "proofwriter-owa-jsonl") return DatasetFormat::ProofwriterOwaJsonl;
  return std::nullopt;
}

std::vector<std::string> option_labels(
    const std::map<std::string, std::string>& option_map) {
  std::vector<std::string> labels;
  for (const char* verdict : {"PROVED", "DISPROVED", "UNKNOWN"}) {
    auto it = option_map.find(verdict);
    if (it == option_map.end()) continue;
    if (std::find(labels.begin(), labels.end(), it->second) == labels.end())
      labels.push_back(it->second);
  }
  return labels;
}

Result<DatasetLoad, std::string> load_dataset(const DatasetSpec& spec) {
  for (const char* verdict : {"PROVED", "DISPROVED", "UNKNOWN"}) {
    if (!spec.option_map.count(verdict))
      return std::string("option map missing entry for '") + verdict + "'";
  }

  std::ifstream in(spec.path);
  if (!in.is_open())
    return "cannot open dataset: " + spec.path.string();

  const std::vector<std::string> labels = option_labels(spec.option_map);
  DatasetLoad load;
  std::string line;
  std::size_t line_number = 0;
  std::size_t considered = 0;

  auto diagnose = [&](const std::string& message) {
    load.diagnostics.push_back("line " + std::to_string(line_number) + ": " +
                               message);
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++considered;

    json object = json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object()) {
      diagnose("not a JSON object");
      continue;
    }

    agents::Problem problem;
    problem.options = labels;
    if (object.contains("id") && object["id"].is_string())
      problem.id = object["id"].get<std::string>();
    else
      problem.id = spec.name + "-" + std::to_string(line_number);

    std::string error;
    if (spec.format == DatasetFormat::FolioJsonl) {
      std::string label;
      if (!read_string(object, "premises", problem.context, error) ||
          !read_string(object, "conclusion", problem.question, error) ||
          !read_string(object, "label", label, error)) {
        diagnose(error);
        continue;
      }
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
        diagnose("unknown label '" + label + "'");
        continue;
      }
      problem.gold_label = label;
    } else {
      std::string answer;
      if (!read_string(object, "theory", problem.context, error) ||
          !read_string(object, "question", problem.question, error) ||
          !read_string(object, "answer", answer, error)) {
        diagnose(error);
        continue;
      }
      auto it = spec.option_map.find(answer);
      if (it == spec.option_map.end()) {
        diagnose("unknown answer '" + answer + "'");
        continue;
      }
      problem.gold_label = it->second;
    }
    load.problems.push_back(std::move(problem));
  }

  if (considered == 0)
    load.warnings.push_back("dataset " + spec.path.string() + " is empty");

  // A few bad lines are reported and skipped; a mostly-bad file is an
  // error in its own right.
  if (considered > 0 && load.diagnostics.size() * 10 > considered) {
    std::ostringstream out;
    out << "dataset " << spec.path.string() << ": " << load.diagnostics.size()
        << " of " << considered << " lines malformed";
    for (const std::string& d : load.diagnostics) out << "\n  " << d;
    return out.str();
  }
  return load;
}

}  // namespace resolute::eval
