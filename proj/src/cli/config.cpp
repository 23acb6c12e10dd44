// SPDX-License-Identifier: Apache-2.0
#include "resolute/cli/config.hpp"

#include <fstream>

namespace resolute::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& p) {
  return p.is_absolute() ? p : base / p;
}

// Field accessors that surface one uniform error shape.
template <typename T>
bool get_field(const json& object, const char* name, T& out,
               std::string& error) {
  auto it = object.find(name);
  if (it == object.end()) return true;  // optional; keep the default
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    error = std::string("field '") + name + "' has the wrong type";
    return false;
  }
  return true;
}

template <typename T>
bool require_field(const json& object, const char* name, T& out,
                   std::string& error) {
  if (object.find(name) == object.end()) {
    error = std::string("missing field '") + name + "'";
    return false;
  }
  return get_field(object, name, out, error);
}

Result<eval::DatasetSpec, std::string> parse_dataset(
    const json& object, const std::filesystem::path& base_dir) {
  if (!object.is_object())
    return std::string("field 'dataset' has the wrong type");
  eval::DatasetSpec spec;
  std::string error;
  std::string path;
  std::string format;
  if (!require_field(object, "name", spec.name, error) ||
      !require_field(object, "path", path, error) ||
      !require_field(object, "format", format, error))
    return "dataset: " + error;
  spec.path = resolve(base_dir, path);
  auto parsed_format = eval::dataset_format_from_name(format);
  if (!parsed_format.has_value())
    return "dataset: unknown format '" + format + "'";
  spec.format = *parsed_format;

  auto options = object.find("options");
  if (options == object.end())
    return std::string("dataset: missing field 'options'");
  if (!options->is_object())
    return std::string("dataset: field 'options' has the wrong type");
  for (auto it = options->begin(); it != options->end(); ++it) {
    if (!it.value().is_string())
      return "dataset: option for '" + it.key() + "' has the wrong type";
    spec.option_map[it.key()] = it.value().get<std::string>();
  }
  for (const char* verdict : {"PROVED", "DISPROVED", "UNKNOWN"})
    if (!spec.option_map.count(verdict))
      return std::string("dataset: option map missing entry for '") + verdict +
             "'";
  return spec;
}

}  // namespace

Result<RunConfig, std::string> parse_run_config(
    const json& document, const std::filesystem::path& base_dir) {
  if (!document.is_object())
    return std::string("run config is not a JSON object");

  RunConfig config;
  std::string error;

  auto backend = document.find("backend");
  if (backend == document.end())
    return std::string("missing field 'backend'");
  if (!backend->is_object() || !backend->contains("kind"))
    return std::string("backend: missing field 'kind'");
  std::string kind;
  if (!require_field(*backend, "kind", kind, error)) return "backend: " + error;

  if (kind == "live") {
    config.backend = BackendKind::Live;
    if (!require_field(*backend, "endpoint", config.live.endpoint, error) ||
        !get_field(*backend, "credential_env", config.live.credential_env,
                   error))
      return "backend: " + error;
  } else if (kind == "scripted") {
    config.backend = BackendKind::Scripted;
    std::string transcript;
    if (!require_field(*backend, "transcript", transcript, error) ||
        !get_field(*backend, "verify_hashes", config.scripted.verify_hashes,
                   error))
      return "backend: " + error;
    config.scripted.transcript = resolve(base_dir, transcript);
  } else if (kind == "synthetic") {
    config.backend = BackendKind::Synthetic;
    if (!get_field(*backend, "problems", config.synthetic.problems, error) ||
        !get_field(*backend, "repair_probability",
                   config.synthetic.repair_probability, error))
      return "backend: " + error;
  } else {
    return "backend: unknown kind '" + kind + "'";
  }

  if (document.contains("dataset")) {
    auto dataset = parse_dataset(document.at("dataset"), base_dir);
    if (!dataset.has_value()) return dataset.error();
    config.dataset = dataset.value();
  } else if (config.backend != BackendKind::Synthetic) {
    return std::string("missing field 'dataset'");
  }

  std::string output_dir = config.output_dir.string();
  if (!get_field(document, "model", config.model, error) ||
      !get_field(document, "max_rounds", config.max_rounds, error) ||
      !get_field(document, "refine_on_unknown", config.refine_on_unknown,
                 error) ||
      !get_field(document, "revert_to_initial", config.revert_to_initial,
                 error) ||
      !get_field(document, "fallback_random", config.fallback_random, error) ||
      !get_field(document, "seed", config.seed, error) ||
      !get_field(document, "output_dir", output_dir, error) ||
      !get_field(document, "concurrency", config.concurrency, error) ||
      !get_field(document, "record_transcript", config.record_transcript,
                 error))
    return error;
  config.output_dir = resolve(base_dir, output_dir);

  if (document.contains("backtracking")) {
    const json& bt = document.at("backtracking");
    if (bt.is_boolean())
      config.backtracking = bt.get<bool>();
    else if (bt == "on")
      config.backtracking = true;
    else if (bt == "off")
      config.backtracking = false;
    else
      return std::string("field 'backtracking' must be on, off, or boolean");
  }

  if (document.contains("limits")) {
    const json& limits = document.at("limits");
    if (!limits.is_object())
      return std::string("field 'limits' has the wrong type");
    if (!get_field(limits, "max_clauses", config.limits.max_clauses, error) ||
        !get_field(limits, "max_seconds", config.limits.max_seconds, error) ||
        !get_field(limits, "max_clause_weight",
                   config.limits.max_clause_weight, error))
      return "limits: " + error;
  }

  if (config.max_rounds < 0)
    return std::string("field 'max_rounds' must be non-negative");
  if (config.concurrency == 0)
    return std::string("field 'concurrency' must be at least 1");
  if (config.fallback_random && !document.contains("seed"))
    return std::string("seed required when fallback_random is on");
  if (config.backend == BackendKind::Scripted && config.record_transcript)
    return std::string("scripted backend forbids recording");
  return config;
}

Result<RunConfig, std::string> load_run_config(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in.is_open()) return "cannot open config: " + path.string();
  json document = json::parse(in, nullptr, false);
  if (document.is_discarded())
    return "config is not valid JSON: " + path.string();
  auto parent = path.parent_path();
  if (parent.empty()) parent = ".";
  return parse_run_config(document, parent);
}

ordered_json config_echo(const RunConfig& config) {
  ordered_json echo;
  switch (config.backend) {
    case BackendKind::Live:
      echo["backend"] = {{"kind", "live"},
                         {"endpoint", config.live.endpoint},
                         {"credential_env", config.live.credential_env}};
      break;
    case BackendKind::Scripted:
      echo["backend"] = {{"kind", "scripted"},
                         {"transcript", config.scripted.transcript.string()},
                         {"verify_hashes", config.scripted.verify_hashes}};
      break;
    case BackendKind::Synthetic:
      echo["backend"] = {
          {"kind", "synthetic"},
          {"problems", config.synthetic.problems},
          {"repair_probability", config.synthetic.repair_probability}};
      break;
  }
  if (config.dataset.has_value()) {
    ordered_json options;
    for (const auto& [verdict, label] : config.dataset->option_map)
      options[verdict] = label;
    echo["dataset"] = {
        {"name", config.dataset->name},
        {"path", config.dataset->path.string()},
        {"format", std::string(eval::dataset_format_name(config.dataset->format))},
        {"options", options}};
  }
  echo["model"] = config.model;
  echo["max_rounds"] = config.max_rounds;
  echo["backtracking"] = config.backtracking ? "on" : "off";
  echo["refine_on_unknown"] = config.refine_on_unknown;
  echo["revert_to_initial"] = config.revert_to_initial;
  echo["fallback_random"] = config.fallback_random;
  echo["seed"] = config.seed;
  echo["limits"] = {{"max_clauses", config.limits.max_clauses},
                    {"max_seconds", config.limits.max_seconds},
                    {"max_clause_weight", config.limits.max_clause_weight}};
  echo["output_dir"] = config.output_dir.string();
  echo["concurrency"] = config.concurrency;
  echo["record_transcript"] = config.record_transcript;
  return echo;
}

}  // namespace resolute::cli
