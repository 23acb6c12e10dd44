// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resolute/agents/types.hpp"
#include "resolute/result.hpp"

namespace resolute::eval {

// JSON-lines layouts this loader understands.
//   FolioJsonl:          {"premises": str, "conclusion": str,
//                         "label": answer-label}
//   ProofwriterOwaJsonl: {"theory": str, "question": str,
//                         "answer": "PROVED"|"DISPROVED"|"UNKNOWN"}
// Every line may also carry an optional "id"; absent ids are synthesized
// as "<dataset name>-<line number>".
enum class DatasetFormat { FolioJsonl, ProofwriterOwaJsonl };

// "folio-jsonl" | "proofwriter-owa-jsonl".
std::string_view dataset_format_name(DatasetFormat f);
std::optional<DatasetFormat> dataset_format_from_name(std::string_view name);

struct DatasetSpec {
  std::string name;
  std::filesystem::path path;
  DatasetFormat format = DatasetFormat::FolioJsonl;
  // Solver verdict name -> answer label; must be total over
  // {PROVED, DISPROVED, UNKNOWN}. Also fixes the answer-option order:
  // PROVED's label, then DISPROVED's, then UNKNOWN's (duplicates
  // collapsed).
  std::map<std::string, std::string> option_map;
};

struct DatasetLoad {
  std::vector<agents::Problem> problems;
  // "line N: ..." for each malformed line (skipped, never silent).
  std::vector<std::string> diagnostics;
  std::vector<std::string> warnings;
};

// The answer options implied by an option map, in verdict order.
std::vector<std::string> option_labels(
    const std::map<std::string, std::string>& option_map);

// Errors: incomplete option map, unreadable file, or more than 10% of
// non-empty lines malformed (the error carries the line diagnostics).
Result<DatasetLoad, std::string> load_dataset(const DatasetSpec& spec);

}  // namespace resolute::eval
