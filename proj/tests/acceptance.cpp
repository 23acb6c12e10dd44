// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per function, one [PASS]/[FAIL] line
// per criterion on stdout. Exits nonzero when any criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "resolute/agents/agent.hpp"
#include "resolute/agents/record.hpp"
#include "resolute/agents/synthetic.hpp"
#include "resolute/cli/runner.hpp"
#include "resolute/eval/dataset.hpp"
#include "resolute/eval/metrics.hpp"
#include "resolute/fol/parser.hpp"
#include "resolute/fol/printer.hpp"
#include "resolute/fol/program.hpp"
#include "resolute/llm/scripted.hpp"
#include "resolute/llm/transcript.hpp"
#include "resolute/prover/enumerate.hpp"
#include "resolute/prover/prove.hpp"
#include "support/formulation_gen.hpp"
#include "support/generators.hpp"

using namespace resolute;

namespace {

// Appends failure detail; a criterion passes when it leaves `detail`
// empty.
using Criterion = std::function<void(std::string& detail)>;

void note(std::string& detail, const std::string& line) {
  if (!detail.empty()) detail += "; ";
  detail += line;
}

// --- Criterion 1: prover agrees with the model-enumeration oracle. -----

void check_prover_oracle(std::string& detail) {
  testgen::Rng rng(417);
  testgen::FormulationFamily family(rng);
  prover::ResourceLimits limits;

  const int kInstances = 600;
  int entailed = 0;
  int entailed_proved = 0;
  for (int i = 0; i < kInstances; ++i) {
    fol::Formulation f = family.sample();
    prover::SolverVerdict verdict = prover::prove(f, limits);
    auto fact = prover::enumerate_entailment(f, 4);
    if (!fact.has_value()) {
      note(detail, "oracle error at instance " + std::to_string(i) + ": " +
                       fact.error());
      return;
    }
    // Soundness: a proof may never contradict the enumeration.
    if (verdict.outcome == prover::Outcome::Proved &&
        (fact.value() == prover::EnumOutcome::Contradicted ||
         fact.value() == prover::EnumOutcome::Contingent)) {
      note(detail, "unsound PROVED at instance " + std::to_string(i));
      return;
    }
    if (verdict.outcome == prover::Outcome::Disproved &&
        (fact.value() == prover::EnumOutcome::Entailed ||
         fact.value() == prover::EnumOutcome::Contingent)) {
      note(detail, "unsound DISPROVED at instance " + std::to_string(i));
      return;
    }
    if (fact.value() == prover::EnumOutcome::Entailed) {
      ++entailed;
      if (verdict.outcome == prover::Outcome::Proved) ++entailed_proved;
    }
  }
  if (entailed < 50)
    note(detail, "sampler produced only " + std::to_string(entailed) +
                     " entailed instances");
  else if (entailed_proved * 100 < entailed * 99)
    note(detail, "completeness " + std::to_string(entailed_proved) + "/" +
                     std::to_string(entailed) + " below 99%");
}

// --- Criterion 2: parser round-trip and fuzz totality. -----------------

void check_parser_round_trip(std::string& detail) {
  testgen::Rng rng(1815);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    fol::FormulaPtr f = testgen::random_formula(rng, 1 + (i % 4), {});
    std::string text = fol::render_formula(*f);
    auto back = fol::parse_formula(text);
    if (!back.has_value() || !fol::alpha_equal(*f, *back.value())) {
      if (++failures == 1)
        note(detail, "round-trip failure on: " + text);
    }
  }
  if (failures > 0)
    note(detail, std::to_string(failures) + " round-trip failures");

  for (int i = 0; i < 10000; ++i) {
    std::string bytes = testgen::random_bytes(rng, 160);
    // Totality: never throws, never crashes; the results are unused.
    (void)fol::parse_formula(bytes);
    (void)fol::parse_program(bytes);
  }
}

// --- Criterion 3: bundled backtracking scenario. -----------------------

agents::AgentConfig scenario_config(bool backtracking) {
  agents::AgentConfig config;
  config.model = "fixture";
  config.backtracking = backtracking;
  config.option_map = {{"PROVED", "True"},
                       {"DISPROVED", "False"},
                       {"UNKNOWN", "Unknown"}};
  return config;
}

void check_scenario_regression(std::string& detail) {
  const std::filesystem::path fixture_dir =
      std::filesystem::path(RESOLUTE_FIXTURE_DIR) / "young-teachers";

  eval::DatasetSpec spec;
  spec.name = "young-teachers";
  spec.path = fixture_dir / "dataset.jsonl";
  spec.format = eval::DatasetFormat::FolioJsonl;
  spec.option_map = {{"PROVED", "True"},
                     {"DISPROVED", "False"},
                     {"UNKNOWN", "Unknown"}};
  auto dataset = eval::load_dataset(spec);
  if (!dataset.has_value() || dataset.value().problems.size() != 1) {
    note(detail, "fixture dataset unusable");
    return;
  }
  const agents::Problem& problem = dataset.value().problems[0];

  auto transcript = llm::Transcript::load(fixture_dir / "transcript.jsonl");
  if (!transcript.has_value()) {
    note(detail, "fixture transcript unusable: " + transcript.error());
    return;
  }

  for (bool backtracking : {false, true}) {
    auto backend = llm::ScriptedBackend::make(transcript.value());
    if (!backend.has_value()) {
      note(detail, backend.error());
      return;
    }
    agents::RunRecord record = agents::run_problem(
        problem, *backend.value(), scenario_config(backtracking));
    if (record.status != agents::RunStatus::Ok) {
      note(detail, "run failed: " + record.error);
      return;
    }
    if (backtracking && record.final_answer != *problem.gold_label)
      note(detail, "backtracking ON answered " + record.final_answer);
    if (!backtracking && record.final_answer == *problem.gold_label)
      note(detail, "backtracking OFF was not fooled");
  }
}

// --- Criterion 4: refinement state-machine invariants. -----------------

const char* kProgUnknown =
    "Predicates:\nP/1 ::: p\nQ/1 ::: q\nPremises:\nP(a)\nConclusion:\nQ(a)\n";
const char* kProgUnknown2 =
    "Predicates:\nP/1 ::: p\nQ/1 ::: q\nPremises:\nP(b)\nConclusion:\nQ(a)\n";
const char* kProgProved =
    "Predicates:\nP/1 ::: p\nQ/1 ::: q\nPremises:\n"
    "∀x (P(x) → Q(x))\nP(a)\nConclusion:\nQ(a)\n";
const char* kGarbage = "No formal program here.";

void check_state_machine(std::string& detail) {
  agents::Problem problem;
  problem.id = "inv";
  problem.context = "ctx";
  problem.question = "q";
  problem.options = {"True", "False", "Unknown"};

  const std::vector<std::string> formulations = {kProgUnknown, kGarbage,
                                                 kProgProved};
  const std::vector<std::string> candidates = {kProgProved, kProgUnknown,
                                               kProgUnknown2, kGarbage};
  const std::vector<std::string> votes = {"VERDICT: A", "VERDICT: B",
                                          "VERDICT: TIE", "mu"};

  testgen::Rng rng(52);
  for (int iteration = 0; iteration < 1000; ++iteration) {
    agents::AgentConfig config;
    config.model = "m";
    config.max_rounds = 1 + static_cast<int>(rng() % 3);
    config.option_map = {{"PROVED", "True"},
                         {"DISPROVED", "False"},
                         {"UNKNOWN", "Unknown"}};

    llm::Transcript t;
    t.entries.push_back(
        {"", "formulate", 0, "", formulations[rng() % formulations.size()]});
    for (int i = 0; i < config.max_rounds; ++i)
      t.entries.push_back({"", "refine", static_cast<std::size_t>(i), "",
                           candidates[rng() % candidates.size()]});
    for (int i = 0; i < 2 * config.max_rounds; ++i)
      t.entries.push_back({"", "judge", static_cast<std::size_t>(i), "",
                           votes[rng() % votes.size()]});

    for (bool backtracking : {true, false}) {
      config.backtracking = backtracking;
      auto backend = llm::ScriptedBackend::make(t);
      if (!backend.has_value()) {
        note(detail, backend.error());
        return;
      }
      agents::RunRecord record =
          agents::run_problem(problem, *backend.value(), config);

      if (record.gateway_calls >
          1 + 3 * static_cast<std::size_t>(config.max_rounds)) {
        note(detail, "budget exceeded at iteration " +
                         std::to_string(iteration));
        return;
      }
      // Replay the event log: the incumbent changes exactly on ACCEPTED.
      std::string incumbent = record.formulation_round0;
      for (const agents::RoundEvent& e : record.rounds) {
        if (e.action == agents::RoundAction::Accepted) {
          incumbent = e.candidate_text;
        } else if (e.outcome_after != e.outcome_before) {
          note(detail, "revert changed the verdict at iteration " +
                           std::to_string(iteration));
          return;
        }
        if (!backtracking) {
          bool should_accept = e.candidate_parsed;
          if (should_accept != (e.action == agents::RoundAction::Accepted)) {
            note(detail,
                 "baseline deviated from unconditional acceptance at "
                 "iteration " +
                     std::to_string(iteration));
            return;
          }
        }
      }
      if (record.final_formulation != incumbent) {
        note(detail, "a reverted candidate became incumbent at iteration " +
                         std::to_string(iteration));
        return;
      }
    }
  }
}

// --- Criterion 5: refinement curves over the synthetic family. ---------

std::vector<double> accuracy_series(
    const std::vector<agents::SyntheticProblem>& family, bool backtracking,
    std::uint64_t seed) {
  agents::AgentConfig config;
  config.model = "syn";
  config.backtracking = backtracking;
  config.seed = seed;
  config.option_map = {{"PROVED", "True"},
                       {"DISPROVED", "False"},
                       {"UNKNOWN", "Unknown"}};

  agents::SyntheticBackend::Options options;
  options.seed = seed;
  agents::SyntheticBackend backend(family, options);

  std::vector<agents::Problem> problems;
  problems.reserve(family.size());
  for (const auto& sp : family) problems.push_back(sp.problem);
  std::vector<agents::RunRecord> records =
      cli::run_batch(problems, backend, config, 4);

  std::vector<double> series(static_cast<std::size_t>(config.max_rounds) + 1,
                             0.0);
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t k = 0; k < series.size(); ++k)
      if (records[i].answer_at_round(k) == *family[i].problem.gold_label)
        series[k] += 1.0 / static_cast<double>(records.size());
  return series;
}

void check_refinement_curves(std::string& detail) {
  auto family = agents::make_synthetic_problems(200);
  int good_seeds = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::vector<double> on = accuracy_series(family, true, seed);
    std::vector<double> off = accuracy_series(family, false, seed);

    bool monotone = true;
    for (std::size_t k = 1; k < on.size(); ++k)
      if (on[k] < on[k - 1] - 1e-12) monotone = false;
    bool decreased = false;
    for (std::size_t k = 1; k < off.size(); ++k)
      if (off[k] < off[k - 1] - 1e-12) decreased = true;

    if (!monotone)
      note(detail, "seed " + std::to_string(seed) +
                       " not monotone with backtracking");
    if (monotone && decreased) ++good_seeds;
  }
  if (good_seeds * 100 < 20 * 95)
    note(detail, "only " + std::to_string(good_seeds) +
                     "/20 seeds showed the expected pair of curves");
}

// --- Criterion 6: metric identities. -----------------------------------

agents::RunRecord plain_record(const std::string& id,
                               const std::string& answer, bool executes) {
  agents::RunRecord r;
  r.problem_id = id;
  r.max_rounds = 0;
  r.parsed_round0 = executes;
  r.outcome_round0 =
      executes ? prover::Outcome::Unknown : prover::Outcome::ExecutionError;
  r.answer_round0 = answer;
  r.final_outcome = r.outcome_round0;
  r.final_answer = answer;
  return r;
}

void check_metric_identities(std::string& detail) {
  // The worked four-record example, exactly.
  std::vector<agents::RunRecord> records = {
      plain_record("a", "True", true), plain_record("b", "False", true),
      plain_record("c", "True", true),
      plain_record("d", "UNANSWERED", false)};
  eval::Metrics m = eval::compute_metrics(records, {{"a", "True"},
                                                    {"b", "False"},
                                                    {"c", "False"},
                                                    {"d", "True"}});
  if (m.execution_rate != 0.75) note(detail, "E_r is not exactly 0.75");
  if (!m.execution_accuracy.has_value() ||
      *m.execution_accuracy != 2.0 / 3.0)
    note(detail, "E_a is not exactly 2/3");
  if (m.accuracy != 0.50) note(detail, "accuracy is not exactly 0.50");

  // Identities over synthetic record sets (fallback off).
  auto family = agents::make_synthetic_problems(60);
  std::map<std::string, std::string> gold;
  std::vector<agents::Problem> problems;
  for (const auto& sp : family) {
    problems.push_back(sp.problem);
    gold[sp.problem.id] = *sp.problem.gold_label;
  }
  for (std::uint64_t seed : {2u, 9u}) {
    agents::AgentConfig config;
    config.model = "syn";
    config.seed = seed;
    config.backtracking = seed % 2 == 0;
    config.option_map = {{"PROVED", "True"},
                         {"DISPROVED", "False"},
                         {"UNKNOWN", "Unknown"}};
    agents::SyntheticBackend::Options options;
    options.seed = seed;
    agents::SyntheticBackend backend(family, options);
    std::vector<agents::RunRecord> batch =
        cli::run_batch(problems, backend, config, 4);
    eval::Metrics metrics = eval::compute_metrics(batch, gold);

    // accuracy = E_a x E_r as integer counts: reconstruct them.
    double n = static_cast<double>(metrics.n_problems);
    long correct = std::lround(metrics.accuracy * n);
    long executable = std::lround(metrics.execution_rate * n);
    long executable_correct =
        metrics.execution_accuracy.has_value()
            ? std::lround(*metrics.execution_accuracy *
                          static_cast<double>(executable))
            : 0;
    if (correct != executable_correct)
      note(detail, "accuracy != E_a x E_r at seed " + std::to_string(seed));
    if (metrics.per_round_accuracy.back() != metrics.accuracy)
      note(detail, "per-round series does not end at overall accuracy");
  }
}

// --- Criterion 7: record once, replay byte-for-byte. -------------------

int run_binary(const std::string& args, const std::filesystem::path& dir,
               std::string* err_text = nullptr) {
  auto err_path = dir / "_stderr.txt";
  std::string command = std::string(RESOLUTE_BINARY) + " " + args + " > " +
                        (dir / "_stdout.txt").string() + " 2> " +
                        err_path.string();
  int status = std::system(command.c_str());
  if (err_text != nullptr) {
    std::ifstream in(err_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *err_text = buffer.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void check_record_replay(std::string& detail) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "resolute_acceptance_rr";
  fs::remove_all(dir);
  fs::create_directories(dir);

  // A stub completion service: every request gets a program picked by
  // the problem text inside the prompt.
  httplib::Server server;
  server.Post("/v1/chat/completions",
              [&](const httplib::Request& request, httplib::Response& res) {
                nlohmann::json body =
                    nlohmann::json::parse(request.body, nullptr, false);
                std::string prompt;
                if (body.contains("messages") && !body["messages"].empty())
                  prompt = body["messages"][0].value("content", "");
                const char* program =
                    prompt.find("Rose") != std::string::npos ? kProgProved
                                                             : kProgUnknown;
                nlohmann::json reply = {
                    {"choices",
                     {{{"message",
                        {{"role", "assistant"}, {"content", program}}}}}}};
                res.set_content(reply.dump(), "application/json");
              });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  {
    std::ofstream dataset(dir / "dataset.jsonl");
    dataset << R"({"id": "p1", "premises": "Rose is a student.", "conclusion": "Rose teaches.", "label": "True"})"
            << "\n"
            << R"({"id": "p2", "premises": "Jerry naps.", "conclusion": "Jerry teaches.", "label": "Unknown"})"
            << "\n";
  }
  nlohmann::json dataset_spec = {
      {"name", "rr"},
      {"path", "dataset.jsonl"},
      {"format", "folio-jsonl"},
      {"options",
       {{"PROVED", "True"}, {"DISPROVED", "False"}, {"UNKNOWN", "Unknown"}}}};
  nlohmann::json record_config = {
      {"dataset", dataset_spec},
      {"backend",
       {{"kind", "live"},
        {"endpoint", "http://127.0.0.1:" + std::to_string(port)},
        {"credential_env", "RESOLUTE_ACCEPTANCE_KEY"}}},
      {"model", "stub-model"},
      {"max_rounds", 2},
      {"refine_on_unknown", false},
      {"record_transcript", true},
      {"output_dir", "recorded"}};
  {
    std::ofstream config(dir / "record.json");
    config << record_config.dump(2) << "\n";
  }
  nlohmann::json replay_config = record_config;
  replay_config["backend"] = {{"kind", "scripted"},
                              {"transcript", "recorded/transcript.jsonl"},
                              {"verify_hashes", true}};
  replay_config.erase("record_transcript");
  replay_config["output_dir"] = "replayed";
  {
    std::ofstream config(dir / "replay.json");
    config << replay_config.dump(2) << "\n";
  }

  setenv("RESOLUTE_ACCEPTANCE_KEY", "sk-acceptance", 1);
  std::string err_text;
  int code = run_binary("run --config " + (dir / "record.json").string(), dir,
                        &err_text);
  if (code != 0) {
    note(detail, "recording run exited " + std::to_string(code) + ": " +
                     err_text);
  } else {
    code = run_binary("replay --config " + (dir / "replay.json").string(),
                      dir, &err_text);
    if (code != 0)
      note(detail, "replay exited " + std::to_string(code) + ": " + err_text);
  }

  if (detail.empty()) {
    auto read = [](const fs::path& p) {
      std::ifstream in(p);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    };
    std::string recorded = read(dir / "recorded" / "records.jsonl");
    std::string replayed = read(dir / "replayed" / "records.jsonl");
    if (recorded.empty())
      note(detail, "recording produced no records");
    else if (recorded != replayed)
      note(detail, "replayed records differ from recorded records");
  }

  server.stop();
  server_thread.join();
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"prover-oracle-equivalence", check_prover_oracle},
      {"parser-round-trip-and-fuzz", check_parser_round_trip},
      {"bundled-scenario-regression", check_scenario_regression},
      {"state-machine-invariants", check_state_machine},
      {"refinement-curves", check_refinement_curves},
      {"metric-identities", check_metric_identities},
      {"record-replay-byte-identical", check_record_replay},
  };

  int failures = 0;
  for (const auto& [name, criterion] : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    criterion(detail);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (detail.empty()) {
      std::printf("[PASS] %s (%.2fs)\n", name, seconds);
    } else {
      std::printf("[FAIL] %s (%.2fs): %s\n", name, seconds, detail.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
