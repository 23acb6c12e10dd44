// SPDX-License-Identifier: Apache-2.0
#include "resolute/agents/synthetic.hpp"

#include <utility>

#include "resolute/fol/program.hpp"
#include "resolute/prover/prove.hpp"

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

// splitmix64; hand-rolled so draws are identical on every platform.
std::uint64_t next_random(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool draw(std::uint64_t& state, double probability) {
  return static_cast<double>(next_random(state) >> 11) * 0x1.0p-53 <
         probability;
}

std::string trim_copy(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Extracts the text between two markers ("" = end of string).
std::string slice(const std::string& text, const std::string& from,
                  const std::string& to) {
  std::size_t begin = text.find(from);
  if (begin == std::string::npos) return "";
  begin += from.size();
  std::size_t end = to.empty() ? text.size() : text.find(to, begin);
  if (end == std::string::npos) end = text.size();
  return trim_copy(text.substr(begin, end - begin));
}

std::string program(const std::string& rule, const std::string& item,
                    bool broken_conclusion = false) {
  std::string text =
      "Predicates:\n"
      "P/1 ::: has property P\n"
      "Q/1 ::: has property Q\n"
      "Premises:\n";
  if (!rule.empty()) text += rule + "\n";
  text += "P(" + item + ") ::: " + item + " has property P\n";
  text += "Conclusion:\n";
  text += "Q(" + item + (broken_conclusion ? "\n" : ")\n");
  return text;
}

}  // namespace

class SyntheticGateway : public llm::Gateway {
 public:
  SyntheticGateway(SyntheticBackend& backend, const SyntheticProblem* problem,
                   std::uint64_t rng_state)
      : backend_(backend), problem_(problem), rng_state_(rng_state) {}

  llm::CompletionResult complete(const llm::CompletionRequest& r) override {
    if (problem_ == nullptr)
      return llm::GatewayError{llm::GatewayErrorKind::Transport,
                               "synthetic backend has no such problem"};
    return backend_.serve(*problem_, rng_state_, r);
  }

 private:
  SyntheticBackend& backend_;
  const SyntheticProblem* problem_;
  std::uint64_t rng_state_;
};

SyntheticBackend::SyntheticBackend(std::vector<SyntheticProblem> problems,
                                   Options options)
    : options_(options) {
  for (auto& p : problems) {
    std::string id = p.problem.id;
    problems_.emplace(std::move(id), std::move(p));
  }
}

std::unique_ptr<llm::Gateway> SyntheticBackend::session(
    const std::string& problem_id) {
  auto it = problems_.find(problem_id);
  const SyntheticProblem* problem =
      it == problems_.end() ? nullptr : &it->second;
  return std::make_unique<SyntheticGateway>(
      *this, problem, options_.seed ^ fnv1a(problem_id));
}

std::string SyntheticBackend::answer_of(
    const std::string& program_text) const {
  auto parsed = fol::parse_program(program_text);
  if (!parsed) return std::string(kUnanswered);
  prover::ResourceLimits limits;
  limits.max_seconds = 5.0;
  auto verdict = prover::prove(parsed.value(), limits);
  switch (verdict.outcome) {
    case prover::Outcome::Proved:
      return "True";
    case prover::Outcome::Disproved:
      return "False";
    case prover::Outcome::Unknown:
      return "Unknown";
    case prover::Outcome::ExecutionError:
      break;
  }
  return std::string(kUnanswered);
}

llm::CompletionResult SyntheticBackend::serve(
    const SyntheticProblem& problem, std::uint64_t& rng_state,
    const llm::CompletionRequest& request) {
  if (request.tag == "formulate") return problem.initial;
  if (request.tag == "refine")
    return draw(rng_state, options_.repair_probability) ? problem.good
                                                        : problem.degraded;
  if (request.tag == "judge") {
    const std::string& prompt =
        request.messages.empty() ? std::string() : request.messages[0].content;
    std::string a = slice(prompt, "Program A:", "Program B:");
    std::string b = slice(prompt, "Program B:", "Compare how");
    std::string gold = problem.problem.gold_label.value_or("");
    bool a_correct = answer_of(a) == gold;
    bool b_correct = answer_of(b) == gold;
    std::string vote = a_correct == b_correct ? "TIE"
                       : a_correct            ? "A"
                                              : "B";
    return "Judged against the stated problem.\nVERDICT: " + vote;
  }
  return llm::GatewayError{
      llm::GatewayErrorKind::Transport,
      "synthetic backend: unexpected request tag '" + request.tag + "'"};
}

std::vector<SyntheticProblem> make_synthetic_problems(std::size_t count) {
  std::vector<SyntheticProblem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::string item = "obj" + std::to_string(i);
    const std::string rule_pos =
        "∀x (P(x) → Q(x)) ::: every item with property P has "
        "property Q";
    const std::string rule_neg =
        "∀x (P(x) → ¬Q(x)) ::: no item with property P has "
        "property Q";
    const std::string rule_rev =
        "∀x (Q(x) → P(x)) ::: every item with property Q has "
        "property P";

    SyntheticProblem p;
    p.problem.id = "syn-" + std::to_string(i);
    p.problem.question = "Does item " + item + " have property Q?";
    p.problem.options = {"True", "False", "Unknown"};

    std::size_t kind = i % 20;
    if (kind < 12) {
      // Gold Unknown: the initial formulation is already correct; a
      // degraded refinement invents a rule and proves too much.
      p.problem.context = "Item " + item + " has property P.";
      p.problem.gold_label = "Unknown";
      p.good = program("", item);
      p.initial = p.good;
      p.degraded = program(rule_pos, item);
    } else if (kind < 17) {
      // Gold True: starts broken (missing rule, or a syntax error on odd
      // indices); a degraded refinement writes the rule backwards.
      p.problem.context = "Every item that has property P also has property "
                          "Q. Item " +
                          item + " has property P.";
      p.problem.gold_label = "True";
      p.good = program(rule_pos, item);
      p.initial = i % 2 == 0 ? program("", item) : program(rule_pos, item, true);
      p.degraded = program(rule_rev, item);
    } else {
      // Gold False: starts broken; a degraded refinement flips the rule's
      // sign and proves the opposite.
      p.problem.context = "No item that has property P has property Q. Item " +
                          item + " has property P.";
      p.problem.gold_label = "False";
      p.good = program(rule_neg, item);
      p.initial = i % 2 == 0 ? program("", item) : program(rule_neg, item, true);
      p.degraded = program(rule_pos, item);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace resolute::agents
