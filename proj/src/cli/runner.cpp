// SPDX-License-Identifier: Apache-2.0
#include "resolute/cli/runner.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "resolute/agents/synthetic.hpp"
#include "resolute/llm/http.hpp"
#include "resolute/llm/scripted.hpp"

namespace resolute::cli {

namespace {

agents::AgentConfig agent_config_from(const RunConfig& config) {
  agents::AgentConfig agent;
  agent.max_rounds = config.max_rounds;
  agent.backtracking = config.backtracking;
  agent.refine_on_unknown = config.refine_on_unknown;
  agent.revert_to_initial = config.revert_to_initial;
  agent.fallback_random = config.fallback_random;
  agent.seed = config.seed;
  agent.model = config.model;
  agent.limits = config.limits;
  if (config.dataset.has_value())
    agent.option_map = config.dataset->option_map;
  else
    agent.option_map = {{"PROVED", "True"},
                        {"DISPROVED", "False"},
                        {"UNKNOWN", "Unknown"}};
  return agent;
}

}  // namespace

Result<RunSetup, std::string> prepare_run(const RunConfig& config) {
  RunSetup setup;
  setup.agent_config = agent_config_from(config);

  switch (config.backend) {
    case BackendKind::Live: {
      llm::HttpBackend::Config http;
      http.endpoint = config.live.endpoint;
      http.model = config.model;
      http.credential_env = config.live.credential_env;
      http.max_in_flight = config.concurrency;
      auto backend = llm::HttpBackend::make(std::move(http));
      if (!backend.has_value()) return backend.error();
      setup.backend = std::move(backend.value());
      break;
    }
    case BackendKind::Scripted: {
      auto transcript = llm::Transcript::load(config.scripted.transcript);
      if (!transcript.has_value()) return transcript.error();
      llm::ScriptedBackend::Options options;
      options.verify_hashes = config.scripted.verify_hashes;
      auto backend =
          llm::ScriptedBackend::make(std::move(transcript.value()), options);
      if (!backend.has_value()) return backend.error();
      setup.backend = std::move(backend.value());
      break;
    }
    case BackendKind::Synthetic: {
      auto family = agents::make_synthetic_problems(config.synthetic.problems);
      agents::SyntheticBackend::Options options;
      options.repair_probability = config.synthetic.repair_probability;
      options.seed = config.seed;
      setup.backend =
          std::make_shared<agents::SyntheticBackend>(family, options);
      setup.problems.reserve(family.size());
      for (const auto& sp : family) setup.problems.push_back(sp.problem);
      break;
    }
  }

  if (config.record_transcript) {
    setup.recorder = std::make_shared<llm::RecordingBackend>(setup.backend);
    setup.backend = setup.recorder;
  }

  if (config.dataset.has_value()) {
    auto load = eval::load_dataset(*config.dataset);
    if (!load.has_value()) return load.error();
    if (config.backend != BackendKind::Synthetic)
      setup.problems = std::move(load.value().problems);
    for (const std::string& w : load.value().warnings)
      setup.warnings.push_back(w);
    for (const std::string& d : load.value().diagnostics)
      setup.warnings.push_back(config.dataset->path.string() + ": " + d);
  }
  return setup;
}

std::vector<agents::RunRecord> run_batch(
    const std::vector<agents::Problem>& problems, llm::Backend& backend,
    const agents::AgentConfig& agent_config, std::size_t concurrency,
    const std::function<void(std::size_t, std::size_t)>& progress) {
  std::vector<agents::RunRecord> records(problems.size());
  if (problems.empty()) return records;

  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= problems.size()) return;
      records[i] = agents::run_problem(problems[i], backend, agent_config);
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        progress(++done, problems.size());
      }
    }
  };

  std::size_t workers = std::min(concurrency, problems.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return records;
}

}  // namespace resolute::cli
