// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "resolute/agents/agent.hpp"
#include "resolute/cli/config.hpp"
#include "resolute/llm/recording.hpp"
#include "resolute/result.hpp"

namespace resolute::cli {

// Everything a batch run needs, assembled from a RunConfig. Backend
// construction happens before any dataset I/O so a missing credential
// fails the run up front.
struct RunSetup {
  std::shared_ptr<llm::Backend> backend;
  // Non-null when record_transcript is on; owns `backend`'s inner.
  std::shared_ptr<llm::RecordingBackend> recorder;
  std::vector<agents::Problem> problems;
  agents::AgentConfig agent_config;
  std::vector<std::string> warnings;
};

Result<RunSetup, std::string> prepare_run(const RunConfig& config);

// Runs every problem through the refinement loop, `concurrency` at a
// time. Records come back in problem order regardless of scheduling.
// `progress` (optional) is invoked serially after each completed problem.
std::vector<agents::RunRecord> run_batch(
    const std::vector<agents::Problem>& problems, llm::Backend& backend,
    const agents::AgentConfig& agent_config, std::size_t concurrency,
    const std::function<void(std::size_t done, std::size_t total)>& progress =
        nullptr);

}  // namespace resolute::cli
