// SPDX-License-Identifier: Apache-2.0
#include "resolute/agents/record.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace resolute::agents {

namespace {

using nlohmann::ordered_json;

ordered_json round_to_json(const RoundEvent& e) {
  ordered_json j;
  j["round"] = e.round;
  j["trigger"] = std::string(trigger_name(e.trigger));
  j["candidate"] = e.candidate_text;
  j["parsed"] = e.candidate_parsed;
  j["judged"] = e.judged;
  j["votes"] = e.judge.votes;
  j["decision"] = std::string(judge_decision_name(e.judge.decision));
  j["rationale"] = e.judge.rationale;
  j["action"] = std::string(round_action_name(e.action));
  j["outcome_before"] = std::string(prover::outcome_name(e.outcome_before));
  j["outcome_after"] = std::string(prover::outcome_name(e.outcome_after));
  j["answer_after"] = e.answer_after;
  return j;
}

// Pulls typed fields out of one JSON object, remembering the first
// problem it hits so callers can report it.
class Reader {
 public:
  explicit Reader(const nlohmann::json& j) : j_(j) {}

  template <typename T>
  bool get(const char* name, T& out) {
    if (!j_.contains(name)) {
      error_ = "missing field '" + std::string(name) + "'";
      return false;
    }
    try {
      out = j_.at(name).get<T>();
    } catch (const nlohmann::json::exception&) {
      error_ = "field '" + std::string(name) + "' has the wrong type";
      return false;
    }
    return true;
  }

  template <typename Enum>
  bool get_named(const char* name,
                 std::optional<Enum> (*from_name)(std::string_view),
                 Enum& out) {
    std::string raw;
    if (!get(name, raw)) return false;
    auto value = from_name(raw);
    if (!value) {
      error_ = "field '" + std::string(name) + "': unknown value '" + raw +
               "'";
      return false;
    }
    out = *value;
    return true;
  }

  const std::string& error() const { return error_; }

 private:
  const nlohmann::json& j_;
  std::string error_;
};

Result<RoundEvent, std::string> round_from_json(const nlohmann::json& j) {
  RoundEvent e;
  Reader r(j);
  if (!r.get("round", e.round) ||
      !r.get_named("trigger", trigger_from_name, e.trigger) ||
      !r.get("candidate", e.candidate_text) ||
      !r.get("parsed", e.candidate_parsed) || !r.get("judged", e.judged) ||
      !r.get("votes", e.judge.votes) ||
      !r.get_named("decision", judge_decision_from_name, e.judge.decision) ||
      !r.get("rationale", e.judge.rationale) ||
      !r.get_named("action", round_action_from_name, e.action) ||
      !r.get_named("outcome_before", prover::outcome_from_name,
                   e.outcome_before) ||
      !r.get_named("outcome_after", prover::outcome_from_name,
                   e.outcome_after) ||
      !r.get("answer_after", e.answer_after))
    return r.error();
  return e;
}

}  // namespace

std::string serialize_record(const RunRecord& record) {
  ordered_json j;
  j["problem"] = record.problem_id;
  j["status"] = std::string(run_status_name(record.status));
  j["error"] = record.error;
  j["max_rounds"] = record.max_rounds;
  j["backtracking"] = record.backtracking;
  j["gateway_calls"] = record.gateway_calls;
  ordered_json round0;
  round0["parsed"] = record.parsed_round0;
  round0["outcome"] = std::string(prover::outcome_name(record.outcome_round0));
  round0["answer"] = record.answer_round0;
  round0["formulation"] = record.formulation_round0;
  j["round0"] = std::move(round0);
  j["rounds"] = ordered_json::array();
  for (const auto& e : record.rounds) j["rounds"].push_back(round_to_json(e));
  ordered_json final_;
  final_["outcome"] = std::string(prover::outcome_name(record.final_outcome));
  final_["answer"] = record.final_answer;
  final_["formulation"] = record.final_formulation;
  j["final"] = std::move(final_);
  return j.dump();
}

Result<RunRecord, std::string> parse_record(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    return std::string("not a JSON object");

  RunRecord r;
  Reader top(j);
  if (!top.get("problem", r.problem_id) ||
      !top.get_named("status", run_status_from_name, r.status) ||
      !top.get("error", r.error) || !top.get("max_rounds", r.max_rounds) ||
      !top.get("backtracking", r.backtracking) ||
      !top.get("gateway_calls", r.gateway_calls))
    return top.error();

  if (!j.contains("round0") || !j.at("round0").is_object())
    return std::string("missing field 'round0'");
  Reader round0(j.at("round0"));
  if (!round0.get("parsed", r.parsed_round0) ||
      !round0.get_named("outcome", prover::outcome_from_name,
                        r.outcome_round0) ||
      !round0.get("answer", r.answer_round0) ||
      !round0.get("formulation", r.formulation_round0))
    return "round0: " + round0.error();

  if (!j.contains("rounds") || !j.at("rounds").is_array())
    return std::string("missing field 'rounds'");
  for (const auto& item : j.at("rounds")) {
    auto e = round_from_json(item);
    if (!e)
      return "rounds[" + std::to_string(r.rounds.size()) + "]: " + e.error();
    r.rounds.push_back(std::move(e.value()));
  }

  if (!j.contains("final") || !j.at("final").is_object())
    return std::string("missing field 'final'");
  Reader final_(j.at("final"));
  if (!final_.get_named("outcome", prover::outcome_from_name,
                        r.final_outcome) ||
      !final_.get("answer", r.final_answer) ||
      !final_.get("formulation", r.final_formulation))
    return "final: " + final_.error();
  return r;
}

Result<bool, std::string> save_records(const std::vector<RunRecord>& records,
                                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return "cannot write records: " + path.string();
  for (const auto& r : records) out << serialize_record(r) << "\n";
  out.close();
  if (!out) return "write failed: " + path.string();
  return true;
}

Result<std::vector<RunRecord>, std::string> load_records(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return "cannot open records: " + path.string();
  std::vector<RunRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto r = parse_record(line);
    if (!r)
      return path.string() + ": line " + std::to_string(line_no) + ": " +
             r.error();
    out.push_back(std::move(r.value()));
  }
  return out;
}

}  // namespace resolute::agents
