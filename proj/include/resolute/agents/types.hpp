// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resolute/fol/diagnostics.hpp"
#include "resolute/fol/program.hpp"
#include "resolute/prover/prove.hpp"

namespace resolute::agents {

// A natural-language reasoning item. `gold_label` rides along for the
// evaluation harness only; nothing in the agent loop reads it.
struct Problem {
  std::string id;
  std::string context;   // premise text
  std::string question;
  std::vector<std::string> options;  // ordered answer labels
  std::optional<std::string> gold_label;
};

// Answer used when a problem produces no verdict and random fallback is
// off. Never a member of Problem::options.
inline constexpr std::string_view kUnanswered = "UNANSWERED";

// What pulled a problem into (another) refinement round.
enum class Trigger { ExecutionError, UnknownVerdict };
std::string_view trigger_name(Trigger t);
std::optional<Trigger> trigger_from_name(std::string_view name);

enum class JudgeDecision { IncumbentBetter, CandidateBetter, Tie };
std::string_view judge_decision_name(JudgeDecision d);
std::optional<JudgeDecision> judge_decision_from_name(std::string_view name);

// Outcome of one pairwise comparison. With order swapping (the default)
// `votes` holds the two raw extracted votes, in call order: first with
// A=incumbent/B=candidate, then swapped.
struct JudgeVerdict {
  JudgeDecision decision = JudgeDecision::IncumbentBetter;
  std::vector<std::string> votes;
  std::string rationale;
};

enum class RoundAction { Accepted, Reverted };
std::string_view round_action_name(RoundAction a);
std::optional<RoundAction> round_action_from_name(std::string_view name);

// One completed refinement round. `judged` is false on the paths that
// spend no judge calls: unparseable candidates (auto-revert), candidates
// replacing an unparseable incumbent (auto-accept), and backtracking-off
// runs (unconditional accept).
struct RoundEvent {
  int round = 1;  // 1-based; round 0 is the initial formulation
  Trigger trigger = Trigger::ExecutionError;
  std::string candidate_text;
  bool candidate_parsed = false;
  bool judged = false;
  JudgeVerdict judge;
  RoundAction action = RoundAction::Reverted;
  prover::Outcome outcome_before = prover::Outcome::Unknown;
  prover::Outcome outcome_after = prover::Outcome::Unknown;
  std::string answer_after;
};

enum class RunStatus { Ok, GatewayFailed };
std::string_view run_status_name(RunStatus s);
std::optional<RunStatus> run_status_from_name(std::string_view name);

// Everything one problem run produced, sufficient to recompute the
// per-round answer series without re-executing anything. Contains no
// wall-clock values so scripted runs serialize identically.
struct RunRecord {
  std::string problem_id;
  RunStatus status = RunStatus::Ok;
  std::string error;  // gateway failure message when status != Ok
  int max_rounds = 0;
  bool backtracking = true;
  std::size_t gateway_calls = 0;

  bool parsed_round0 = false;
  prover::Outcome outcome_round0 = prover::Outcome::ExecutionError;
  std::string answer_round0;
  std::string formulation_round0;  // raw model output

  std::vector<RoundEvent> rounds;

  prover::Outcome final_outcome = prover::Outcome::ExecutionError;
  std::string final_answer;
  std::string final_formulation;  // raw text of the final incumbent

  // Answer the run would have reported had it stopped after `round`
  // refinement rounds (0 = no refinement).
  const std::string& answer_at_round(std::size_t round) const {
    if (round == 0) return answer_round0;
    if (round <= rounds.size()) return rounds[round - 1].answer_after;
    return final_answer;
  }
};

}  // namespace resolute::agents
