// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "resolute/eval/dataset.hpp"
#include "resolute/prover/saturate.hpp"
#include "resolute/result.hpp"

namespace resolute::cli {

enum class BackendKind { Live, Scripted, Synthetic };

struct LiveBackendConfig {
  std::string endpoint;
  std::string credential_env = "RESOLUTE_API_KEY";
};

struct ScriptedBackendConfig {
  std::filesystem::path transcript;
  bool verify_hashes = false;
};

// Built-in problem generator; exists so refinement-curve experiments run
// without any model service or dataset file.
struct SyntheticBackendConfig {
  std::size_t problems = 200;
  double repair_probability = 0.6;
};

// One declarative document describing a batch run. Paths inside the file
// are resolved relative to the file's own directory. Credentials are
// never part of the config: the live backend names an environment
// variable and reads it at startup.
struct RunConfig {
  std::optional<eval::DatasetSpec> dataset;  // required unless synthetic

  BackendKind backend = BackendKind::Scripted;
  LiveBackendConfig live;
  ScriptedBackendConfig scripted;
  SyntheticBackendConfig synthetic;

  std::string model = "default";
  int max_rounds = 3;
  bool backtracking = true;
  bool refine_on_unknown = true;
  bool revert_to_initial = false;
  bool fallback_random = false;
  std::uint64_t seed = 0;
  prover::ResourceLimits limits;
  std::filesystem::path output_dir = "out";
  std::size_t concurrency = 1;
  // Live runs may capture a replayable transcript next to the records;
  // scripted runs must not (the transcript is the input).
  bool record_transcript = false;
};

Result<RunConfig, std::string> parse_run_config(
    const nlohmann::json& document, const std::filesystem::path& base_dir);

Result<RunConfig, std::string> load_run_config(
    const std::filesystem::path& path);

// The provenance block embedded in reports: the resolved configuration.
// Contains the credential variable's name, never its value.
nlohmann::ordered_json config_echo(const RunConfig& config);

}  // namespace resolute::cli
