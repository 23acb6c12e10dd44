// SPDX-License-Identifier: Apache-2.0
#include "resolute/agents/types.hpp"

namespace resolute::agents {

std::string_view trigger_name(Trigger t) {
  switch (t) {
    case Trigger::ExecutionError:
      return "EXECUTION_ERROR";
    case Trigger::UnknownVerdict:
      return "UNKNOWN";
  }
  return "?";
}

std::optional<Trigger> trigger_from_name(std::string_view name) {
  if (name == "EXECUTION_ERROR") return Trigger::ExecutionError;
  if (name == "UNKNOWN") return Trigger::UnknownVerdict;
  return std::nullopt;
}

std::string_view judge_decision_name(JudgeDecision d) {
  switch (d) {
    case JudgeDecision::IncumbentBetter:
      return "IncumbentBetter";
    case JudgeDecision::CandidateBetter:
      return "CandidateBetter";
    case JudgeDecision::Tie:
      return "Tie";
  }
  return "?";
}

std::optional<JudgeDecision> judge_decision_from_name(std::string_view name) {
  if (name == "IncumbentBetter") return JudgeDecision::IncumbentBetter;
  if (name == "CandidateBetter") return JudgeDecision::CandidateBetter;
  if (name == "Tie") return JudgeDecision::Tie;
  return std::nullopt;
}

std::string_view round_action_name(RoundAction a) {
  switch (a) {
    case RoundAction::Accepted:
      return "ACCEPTED";
    case RoundAction::Reverted:
      return "REVERTED";
  }
  return "?";
}

std::optional<RoundAction> round_action_from_name(std::string_view name) {
  if (name == "ACCEPTED") return RoundAction::Accepted;
  if (name == "REVERTED") return RoundAction::Reverted;
  return std::nullopt;
}

std::string_view run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok:
      return "OK";
    case RunStatus::GatewayFailed:
      return "GATEWAY_FAILED";
  }
  return "?";
}

std::optional<RunStatus> run_status_from_name(std::string_view name) {
  if (name == "OK") return RunStatus::Ok;
  if (name == "GATEWAY_FAILED") return RunStatus::GatewayFailed;
  return std::nullopt;
}

}  // namespace resolute::agents
