// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "resolute/agents/prompts.hpp"
#include "resolute/agents/types.hpp"
#include "resolute/llm/gateway.hpp"
#include "resolute/prover/prove.hpp"
#include "resolute/prover/saturate.hpp"
#include "resolute/result.hpp"

namespace resolute::agents {

// Sampling temperatures: deterministic formulation and judging; diversity
// only when re-refining after a revert, which must be able to propose
// something different from the rejected candidate.
inline constexpr double kFormulateTemperature = 0.0;
inline constexpr double kJudgeTemperature = 0.0;
inline constexpr double kRefineRetryTemperature = 0.7;

struct AgentConfig {
  int max_rounds = 3;
  bool backtracking = true;
  bool refine_on_unknown = true;
  // When a candidate is rejected, fall all the way back to the round-0
  // formulation instead of keeping the last accepted one.
  bool revert_to_initial = false;
  bool fallback_random = false;
  std::uint64_t seed = 0;
  std::string model;
  prover::ResourceLimits limits;
  PromptTemplates prompts = default_prompts();
  // Solver outcome name ("PROVED" | "DISPROVED" | "UNKNOWN") -> answer
  // label. Validated for totality when the run config is loaded.
  std::map<std::string, std::string> option_map;
};

// A model response and what became of parsing it. An attempt that failed
// to parse still enters the refinement loop; its diagnostics become the
// error report shown to the refiner.
struct Attempt {
  std::string raw;
  std::optional<fol::Formulation> formulation;
  std::vector<fol::ParseDiagnostic> diagnostics;
  bool parsed() const { return formulation.has_value(); }
};

// The currently accepted attempt plus its execution verdict.
struct Incumbent {
  Attempt attempt;
  prover::SolverVerdict verdict;
};

// Prompt builders, exposed for contract tests.
std::string build_formulate_prompt(const Problem& problem,
                                   const PromptTemplates& prompts);
std::string build_refine_prompt(const Problem& problem,
                                const Incumbent& incumbent,
                                const PromptTemplates& prompts);
std::string build_judge_prompt(const Problem& problem,
                               const std::string& formulation_a,
                               const std::string& formulation_b,
                               const PromptTemplates& prompts);

// The {errors} content for a refine prompt: parse diagnostics, execution
// diagnostics, or an explanation of the UNKNOWN verdict.
std::string describe_errors(const Incumbent& incumbent);

// Parses a raw model response into an Attempt (never fails; parse
// problems land in diagnostics).
Attempt parse_attempt(std::string raw);

// Why a verdict pulls the problem into refinement, if it does.
std::optional<Trigger> refinement_trigger(prover::Outcome outcome,
                                          const AgentConfig& config);

Result<Attempt, llm::GatewayError> formulate(const Problem& problem,
                                             llm::Gateway& gateway,
                                             const AgentConfig& config);

Result<Attempt, llm::GatewayError> refine(const Problem& problem,
                                          const Incumbent& incumbent,
                                          double temperature,
                                          llm::Gateway& gateway,
                                          const AgentConfig& config);

// Reduces one judge response to a vote: "A", "B", or "TIE" (also the
// conservative result for anything unparseable).
std::string extract_vote(const std::string& response);

// Two order-swapped judge calls; the candidate must win both to be
// CandidateBetter. Both-ways ties are Tie; everything else (splits, one
// tie) is IncumbentBetter.
Result<JudgeVerdict, llm::GatewayError> judge_pair(
    const Problem& problem, const fol::Formulation& incumbent,
    const fol::Formulation& candidate, llm::Gateway& gateway,
    const AgentConfig& config);

// Maps a solver outcome to an answer label via the option map.
// EXECUTION_ERROR yields UNANSWERED, or a uniformly drawn option when
// fallback_random is on (rng is consumed only in that case).
std::string interpret(prover::Outcome outcome, const Problem& problem,
                      const AgentConfig& config, std::mt19937_64& rng);

// The full loop: formulate, execute, refine-judge-accept/revert until no
// trigger or the round budget runs out.
RunRecord run_problem(const Problem& problem, llm::Backend& backend,
                      const AgentConfig& config);

}  // namespace resolute::agents
