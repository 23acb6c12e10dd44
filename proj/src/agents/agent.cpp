// SPDX-License-Identifier: Apache-2.0
#include "resolute/agents/agent.hpp"

#include <cctype>
#include <utility>

namespace resolute::agents {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Counts every completion attempt so the round budget is auditable.
class CountingGateway : public llm::Gateway {
 public:
  CountingGateway(llm::Gateway& inner, std::size_t& count)
      : inner_(inner), count_(count) {}

  llm::CompletionResult complete(const llm::CompletionRequest& r) override {
    ++count_;
    return inner_.complete(r);
  }

 private:
  llm::Gateway& inner_;
  std::size_t& count_;
};

llm::CompletionRequest make_request(std::string tag, double temperature,
                                    std::string prompt,
                                    const AgentConfig& config) {
  llm::CompletionRequest request;
  request.model = config.model;
  request.temperature = temperature;
  request.tag = std::move(tag);
  request.messages.push_back({llm::Role::User, std::move(prompt)});
  return request;
}

prover::SolverVerdict execute(const Attempt& attempt,
                              const AgentConfig& config) {
  if (!attempt.parsed()) return prover::execution_error(attempt.diagnostics);
  return prover::prove(*attempt.formulation, config.limits);
}

RunRecord abort_run(RunRecord record, const llm::GatewayError& error) {
  record.status = RunStatus::GatewayFailed;
  record.error = std::string(llm::gateway_error_name(error.kind)) + ": " +
                 error.message;
  record.final_outcome = prover::Outcome::ExecutionError;
  record.final_answer = kUnanswered;
  if (record.answer_round0.empty()) record.answer_round0 = kUnanswered;
  return record;
}

}  // namespace

std::string build_formulate_prompt(const Problem& problem,
                                   const PromptTemplates& prompts) {
  return render_template(prompts.formulate, {{"context", problem.context},
                                             {"question", problem.question}});
}

std::string build_refine_prompt(const Problem& problem,
                                const Incumbent& incumbent,
                                const PromptTemplates& prompts) {
  return render_template(prompts.refine,
                         {{"context", problem.context},
                          {"question", problem.question},
                          {"formulation", incumbent.attempt.raw},
                          {"errors", describe_errors(incumbent)}});
}

std::string build_judge_prompt(const Problem& problem,
                               const std::string& formulation_a,
                               const std::string& formulation_b,
                               const PromptTemplates& prompts) {
  return render_template(prompts.judge, {{"context", problem.context},
                                         {"question", problem.question},
                                         {"formulation_a", formulation_a},
                                         {"formulation_b", formulation_b}});
}

std::string describe_errors(const Incumbent& incumbent) {
  if (!incumbent.attempt.parsed())
    return "The program could not be parsed:\n" +
           fol::describe(incumbent.attempt.diagnostics);
  if (incumbent.verdict.outcome == prover::Outcome::ExecutionError)
    return "The program failed to execute:\n" +
           fol::describe(incumbent.verdict.diagnostics);
  if (incumbent.verdict.outcome == prover::Outcome::Unknown)
    return "The solver returned UNKNOWN: from the premises as written, the "
           "conclusion can be neither proved nor disproved. If the problem "
           "does determine an answer, the program is missing premises or "
           "uses predicates inconsistently, so the formalization does not "
           "capture enough of the problem.";
  return "";
}

Attempt parse_attempt(std::string raw) {
  Attempt attempt;
  auto parsed = fol::parse_program(raw);
  if (parsed)
    attempt.formulation = std::move(parsed.value());
  else
    attempt.diagnostics = std::move(parsed.error());
  attempt.raw = std::move(raw);
  return attempt;
}

std::optional<Trigger> refinement_trigger(prover::Outcome outcome,
                                          const AgentConfig& config) {
  if (outcome == prover::Outcome::ExecutionError)
    return Trigger::ExecutionError;
  if (outcome == prover::Outcome::Unknown && config.refine_on_unknown)
    return Trigger::UnknownVerdict;
  return std::nullopt;
}

Result<Attempt, llm::GatewayError> formulate(const Problem& problem,
                                             llm::Gateway& gateway,
                                             const AgentConfig& config) {
  auto response = gateway.complete(
      make_request("formulate", kFormulateTemperature,
                   build_formulate_prompt(problem, config.prompts), config));
  if (!response) return response.error();
  return parse_attempt(std::move(response.value()));
}

Result<Attempt, llm::GatewayError> refine(const Problem& problem,
                                          const Incumbent& incumbent,
                                          double temperature,
                                          llm::Gateway& gateway,
                                          const AgentConfig& config) {
  auto response = gateway.complete(make_request(
      "refine", temperature,
      build_refine_prompt(problem, incumbent, config.prompts), config));
  if (!response) return response.error();
  return parse_attempt(std::move(response.value()));
}

std::string extract_vote(const std::string& response) {
  std::size_t at = response.rfind("VERDICT:");
  if (at == std::string::npos) return "TIE";
  std::size_t pos = at + 8;
  while (pos < response.size() &&
         (response[pos] == ' ' || response[pos] == '\t'))
    ++pos;
  std::string token;
  while (pos < response.size() &&
         std::isalpha(static_cast<unsigned char>(response[pos])))
    token.push_back(static_cast<char>(
        std::toupper(static_cast<unsigned char>(response[pos++]))));
  if (token == "A" || token == "B" || token == "TIE") return token;
  return "TIE";
}

Result<JudgeVerdict, llm::GatewayError> judge_pair(
    const Problem& problem, const fol::Formulation& incumbent,
    const fol::Formulation& candidate, llm::Gateway& gateway,
    const AgentConfig& config) {
  const std::string incumbent_text = fol::render_program(incumbent);
  const std::string candidate_text = fol::render_program(candidate);

  JudgeVerdict verdict;
  std::string responses[2];
  for (int order = 0; order < 2; ++order) {
    const std::string& a = order == 0 ? incumbent_text : candidate_text;
    const std::string& b = order == 0 ? candidate_text : incumbent_text;
    auto response = gateway.complete(
        make_request("judge", kJudgeTemperature,
                     build_judge_prompt(problem, a, b, config.prompts),
                     config));
    if (!response) return response.error();
    responses[order] = std::move(response.value());
    verdict.votes.push_back(extract_vote(responses[order]));
  }

  bool candidate_first = verdict.votes[0] == "B";   // A=incumbent, B=candidate
  bool candidate_second = verdict.votes[1] == "A";  // swapped
  if (candidate_first && candidate_second)
    verdict.decision = JudgeDecision::CandidateBetter;
  else if (verdict.votes[0] == "TIE" && verdict.votes[1] == "TIE")
    verdict.decision = JudgeDecision::Tie;
  else
    verdict.decision = JudgeDecision::IncumbentBetter;
  verdict.rationale = responses[0] + "\n---\n" + responses[1];
  return verdict;
}

std::string interpret(prover::Outcome outcome, const Problem& problem,
                      const AgentConfig& config, std::mt19937_64& rng) {
  if (outcome == prover::Outcome::ExecutionError) {
    if (config.fallback_random && !problem.options.empty()) {
      std::uniform_int_distribution<std::size_t> pick(
          0, problem.options.size() - 1);
      return problem.options[pick(rng)];
    }
    return std::string(kUnanswered);
  }
  auto it = config.option_map.find(std::string(prover::outcome_name(outcome)));
  return it == config.option_map.end() ? std::string(kUnanswered)
                                       : it->second;
}

RunRecord run_problem(const Problem& problem, llm::Backend& backend,
                      const AgentConfig& config) {
  RunRecord record;
  record.problem_id = problem.id;
  record.max_rounds = config.max_rounds;
  record.backtracking = config.backtracking;

  // Per-problem stream so concurrent runs stay deterministic.
  std::mt19937_64 rng(config.seed ^ fnv1a(problem.id));

  auto session = backend.session(problem.id);
  CountingGateway gateway(*session, record.gateway_calls);

  auto first = formulate(problem, gateway, config);
  if (!first) return abort_run(std::move(record), first.error());

  Incumbent incumbent;
  incumbent.attempt = std::move(first.value());
  incumbent.verdict = execute(incumbent.attempt, config);
  const Incumbent initial = incumbent;

  record.parsed_round0 = incumbent.attempt.parsed();
  record.outcome_round0 = incumbent.verdict.outcome;
  record.answer_round0 =
      interpret(incumbent.verdict.outcome, problem, config, rng);
  record.formulation_round0 = incumbent.attempt.raw;

  for (int round = 1; round <= config.max_rounds; ++round) {
    auto trigger = refinement_trigger(incumbent.verdict.outcome, config);
    if (!trigger) break;

    double temperature =
        !record.rounds.empty() &&
                record.rounds.back().action == RoundAction::Reverted
            ? kRefineRetryTemperature
            : 0.0;
    auto candidate = refine(problem, incumbent, temperature, gateway, config);
    if (!candidate) return abort_run(std::move(record), candidate.error());

    RoundEvent event;
    event.round = round;
    event.trigger = *trigger;
    event.candidate_text = candidate.value().raw;
    event.candidate_parsed = candidate.value().parsed();
    event.outcome_before = incumbent.verdict.outcome;

    if (!candidate.value().parsed()) {
      // Nothing comparable: auto-revert without spending judge calls.
      event.action = RoundAction::Reverted;
      event.judge.decision = JudgeDecision::IncumbentBetter;
      event.judge.rationale =
          "candidate did not parse; reverted without judging";
      if (config.revert_to_initial) incumbent = initial;
    } else {
      Incumbent challenger;
      challenger.attempt = std::move(candidate.value());
      challenger.verdict = execute(challenger.attempt, config);

      bool accept = false;
      if (!config.backtracking) {
        accept = true;
        event.judge.decision = JudgeDecision::CandidateBetter;
        event.judge.rationale =
            "backtracking disabled; candidate accepted unconditionally";
      } else if (!incumbent.attempt.parsed()) {
        // The incumbent is not a formulation; adopt the parseable
        // candidate without judging.
        accept = true;
        event.judge.decision = JudgeDecision::CandidateBetter;
        event.judge.rationale =
            "incumbent did not parse; candidate adopted without judging";
      } else {
        auto verdict =
            judge_pair(problem, *incumbent.attempt.formulation,
                       *challenger.attempt.formulation, gateway, config);
        if (!verdict) return abort_run(std::move(record), verdict.error());
        event.judged = true;
        event.judge = std::move(verdict.value());
        accept = event.judge.decision == JudgeDecision::CandidateBetter;
      }

      if (accept) {
        event.action = RoundAction::Accepted;
        incumbent = std::move(challenger);
      } else {
        event.action = RoundAction::Reverted;
        if (config.revert_to_initial) incumbent = initial;
      }
    }

    event.outcome_after = incumbent.verdict.outcome;
    event.answer_after =
        interpret(incumbent.verdict.outcome, problem, config, rng);
    record.rounds.push_back(std::move(event));
  }

  record.final_outcome = incumbent.verdict.outcome;
  record.final_answer = record.rounds.empty()
                            ? record.answer_round0
                            : record.rounds.back().answer_after;
  record.final_formulation = incumbent.attempt.raw;
  return record;
}

}  // namespace resolute::agents
