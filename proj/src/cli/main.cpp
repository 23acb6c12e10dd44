// SPDX-License-Identifier: Apache-2.0
//
// resolute: parse and prove formulation programs, run LLM refinement
// batches, and evaluate the resulting records.
//
// Exit codes: 0 success; 1 usage, configuration, or I/O failure;
// 2 prove reached no verdict (EXECUTION_ERROR); 3 replay diverged from
// its transcript.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "resolute/agents/record.hpp"
#include "resolute/agents/synthetic.hpp"
#include "resolute/cli/config.hpp"
#include "resolute/cli/runner.hpp"
#include "resolute/eval/dataset.hpp"
#include "resolute/eval/metrics.hpp"
#include "resolute/eval/report.hpp"
#include "resolute/fol/diagnostics.hpp"
#include "resolute/fol/printer.hpp"
#include "resolute/fol/program.hpp"
#include "resolute/prover/prove.hpp"

namespace {

using nlohmann::ordered_json;
using namespace resolute;

struct GlobalOptions {
  std::string config_path;
  std::string out_dir;
  bool json = false;
  bool verbose = false;
};

struct RunOverrides {
  std::string backtracking;  // "on" | "off" | empty (keep config)
  int max_rounds = -1;
  std::optional<std::uint64_t> seed;
  std::string model;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ordered_json term_to_json(const fol::Term& term) {
  ordered_json out;
  switch (term.kind) {
    case fol::Term::Kind::Variable:
      out["kind"] = "variable";
      break;
    case fol::Term::Kind::Constant:
      out["kind"] = "constant";
      break;
    case fol::Term::Kind::Function:
      out["kind"] = "function";
      break;
  }
  out["name"] = term.name;
  if (term.kind == fol::Term::Kind::Function) {
    out["args"] = ordered_json::array();
    for (const fol::Term& a : term.args) out["args"].push_back(term_to_json(a));
  }
  return out;
}

ordered_json formula_to_json(const fol::Formula& f) {
  ordered_json out;
  switch (f.kind) {
    case fol::Formula::Kind::Predicate: {
      out["kind"] = "predicate";
      out["name"] = f.name;
      out["args"] = ordered_json::array();
      for (const fol::Term& a : f.args) out["args"].push_back(term_to_json(a));
      return out;
    }
    case fol::Formula::Kind::Not:
      out["kind"] = "not";
      out["arg"] = formula_to_json(*f.lhs);
      return out;
    case fol::Formula::Kind::And:
      out["kind"] = "and";
      break;
    case fol::Formula::Kind::Or:
      out["kind"] = "or";
      break;
    case fol::Formula::Kind::Implies:
      out["kind"] = "implies";
      break;
    case fol::Formula::Kind::Iff:
      out["kind"] = "iff";
      break;
    case fol::Formula::Kind::ForAll:
      out["kind"] = "forall";
      out["variable"] = f.name;
      out["body"] = formula_to_json(*f.lhs);
      return out;
    case fol::Formula::Kind::Exists:
      out["kind"] = "exists";
      out["variable"] = f.name;
      out["body"] = formula_to_json(*f.lhs);
      return out;
  }
  out["lhs"] = formula_to_json(*f.lhs);
  out["rhs"] = formula_to_json(*f.rhs);
  return out;
}

ordered_json formulation_to_json(const fol::Formulation& f) {
  ordered_json out;
  out["predicates"] = ordered_json::array();
  for (const fol::PredicateDecl& d : f.declarations)
    out["predicates"].push_back(
        {{"name", d.name}, {"arity", d.arity}, {"gloss", d.gloss}});
  out["premises"] = ordered_json::array();
  for (const fol::Premise& p : f.premises)
    out["premises"].push_back({{"text", fol::render_formula(*p.formula)},
                               {"source", p.source},
                               {"ast", formula_to_json(*p.formula)}});
  out["conclusion"] = {{"text", fol::render_formula(*f.goal)},
                       {"ast", formula_to_json(*f.goal)}};
  return out;
}

int cmd_parse(const GlobalOptions& global, const std::string& file) {
  auto text = read_file(file);
  if (!text.has_value()) {
    std::cerr << "cannot open file: " << file << "\n";
    return 1;
  }
  auto parsed = fol::parse_program(text.value());
  if (!parsed.has_value()) {
    std::cerr << fol::describe(parsed.error()) << "\n";
    return 1;
  }
  if (global.json)
    std::cout << formulation_to_json(parsed.value()).dump(2) << "\n";
  else
    std::cout << fol::render_program(parsed.value());
  return 0;
}

int cmd_prove(const GlobalOptions& global, const std::string& file,
              const prover::ResourceLimits& limits,
              const std::string& trace_path) {
  auto text = read_file(file);
  if (!text.has_value()) {
    std::cerr << "cannot open file: " << file << "\n";
    return 1;
  }
  auto parsed = fol::parse_program(text.value());
  if (!parsed.has_value()) {
    std::cerr << fol::describe(parsed.error()) << "\n";
    std::cout << prover::outcome_name(prover::Outcome::ExecutionError) << "\n";
    return 2;
  }

  prover::SolverVerdict verdict = prover::prove(parsed.value(), limits);
  if (!trace_path.empty()) {
    std::ofstream trace(trace_path);
    if (!trace.is_open()) {
      std::cerr << "cannot write trace: " << trace_path << "\n";
      return 1;
    }
    trace << prover::render_trace(verdict.trace);
  }

  if (global.json) {
    ordered_json out;
    out["outcome"] = prover::outcome_name(verdict.outcome);
    ordered_json stats;
    stats["clauses_generated"] = verdict.stats.clauses_generated;
    stats["clauses_kept"] = verdict.stats.clauses_kept;
    stats["elapsed_seconds"] = verdict.stats.elapsed_seconds;
    if (verdict.stats.refutation_run.has_value())
      stats["refutation_run"] =
          prover::sat_status_name(*verdict.stats.refutation_run);
    if (verdict.stats.disproof_run.has_value())
      stats["disproof_run"] =
          prover::sat_status_name(*verdict.stats.disproof_run);
    out["stats"] = stats;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << prover::outcome_name(verdict.outcome) << "\n";
    std::fprintf(stdout, "clauses generated: %zu, kept: %zu, %.3fs\n",
                 verdict.stats.clauses_generated, verdict.stats.clauses_kept,
                 verdict.stats.elapsed_seconds);
  }
  return verdict.outcome == prover::Outcome::ExecutionError ? 2 : 0;
}

Result<cli::RunConfig, std::string> resolved_config(
    const GlobalOptions& global, const RunOverrides& overrides) {
  if (global.config_path.empty())
    return std::string("a config file is required (--config)");
  auto loaded = cli::load_run_config(global.config_path);
  if (!loaded.has_value()) return loaded.error();
  cli::RunConfig config = loaded.value();

  if (!overrides.backtracking.empty()) {
    if (overrides.backtracking == "on")
      config.backtracking = true;
    else if (overrides.backtracking == "off")
      config.backtracking = false;
    else
      return std::string("--backtracking must be on or off");
  }
  if (overrides.max_rounds >= 0) config.max_rounds = overrides.max_rounds;
  if (overrides.seed.has_value()) config.seed = *overrides.seed;
  if (!overrides.model.empty()) config.model = overrides.model;
  if (!global.out_dir.empty()) config.output_dir = global.out_dir;
  return config;
}

std::map<std::string, std::string> gold_of(
    const std::vector<agents::Problem>& problems) {
  std::map<std::string, std::string> gold;
  for (const agents::Problem& p : problems)
    if (p.gold_label.has_value()) gold[p.id] = *p.gold_label;
  return gold;
}

void print_summary(const eval::Metrics& metrics, bool as_json) {
  if (as_json) {
    std::cout << eval::metrics_to_json(metrics).dump(2) << "\n";
    return;
  }
  std::printf("problems: %zu (skipped %zu)\n", metrics.n_problems,
              metrics.skipped);
  std::printf("accuracy: %.4f\n", metrics.accuracy);
  std::printf("execution rate: %.4f\n", metrics.execution_rate);
  if (metrics.execution_accuracy.has_value())
    std::printf("execution accuracy: %.4f\n", *metrics.execution_accuracy);
  else
    std::printf("execution accuracy: n/a\n");
  std::printf("per-round accuracy:");
  for (double a : metrics.per_round_accuracy) std::printf(" %.4f", a);
  std::printf("\n");
}

// Shared tail of run and replay. In strict mode any gateway failure
// aborts with exit 3 before anything is written.
int execute_batch(const GlobalOptions& global, const cli::RunConfig& config,
                  bool strict) {
  auto setup = cli::prepare_run(config);
  if (!setup.has_value()) {
    std::cerr << setup.error() << "\n";
    return 1;
  }
  for (const std::string& warning : setup.value().warnings)
    std::cerr << "warning: " << warning << "\n";

  std::function<void(std::size_t, std::size_t)> progress;
  if (global.verbose)
    progress = [](std::size_t done, std::size_t total) {
      std::cerr << "[" << done << "/" << total << "] done\n";
    };

  std::vector<agents::RunRecord> records =
      cli::run_batch(setup.value().problems, *setup.value().backend,
                     setup.value().agent_config, config.concurrency, progress);

  if (strict) {
    bool diverged = false;
    for (const agents::RunRecord& r : records)
      if (r.status == agents::RunStatus::GatewayFailed) {
        std::cerr << "problem " << r.problem_id << ": " << r.error << "\n";
        diverged = true;
      }
    if (diverged) return 3;
  }

  eval::Metrics metrics =
      eval::compute_metrics(records, gold_of(setup.value().problems));
  auto emitted = eval::emit_report(metrics, records, config.output_dir,
                                   cli::config_echo(config));
  if (!emitted.has_value()) {
    std::cerr << emitted.error() << "\n";
    return 1;
  }
  if (setup.value().recorder != nullptr) {
    auto saved = setup.value().recorder->transcript().save(
        config.output_dir / "transcript.jsonl");
    if (!saved.has_value()) {
      std::cerr << saved.error() << "\n";
      return 1;
    }
  }
  print_summary(metrics, global.json);
  return 0;
}

int cmd_run(const GlobalOptions& global, const RunOverrides& overrides) {
  auto config = resolved_config(global, overrides);
  if (!config.has_value()) {
    std::cerr << config.error() << "\n";
    return 1;
  }
  return execute_batch(global, config.value(), /*strict=*/false);
}

int cmd_replay(const GlobalOptions& global, const RunOverrides& overrides,
               const std::string& transcript_override) {
  auto config = resolved_config(global, overrides);
  if (!config.has_value()) {
    std::cerr << config.error() << "\n";
    return 1;
  }
  cli::RunConfig resolved = config.value();
  if (!transcript_override.empty()) {
    resolved.backend = cli::BackendKind::Scripted;
    resolved.scripted.transcript = transcript_override;
    resolved.record_transcript = false;
  }
  if (resolved.backend != cli::BackendKind::Scripted) {
    std::cerr << "replay requires a scripted backend (set one in the config "
                 "or pass --transcript)\n";
    return 1;
  }
  return execute_batch(global, resolved, /*strict=*/true);
}

int cmd_eval(const GlobalOptions& global, const std::string& records_path,
             int at_round) {
  auto config = resolved_config(global, RunOverrides{});
  if (!config.has_value()) {
    std::cerr << config.error() << "\n";
    return 1;
  }

  auto records = agents::load_records(records_path);
  if (!records.has_value()) {
    std::cerr << records.error() << "\n";
    return 1;
  }

  std::map<std::string, std::string> gold;
  if (config.value().dataset.has_value()) {
    auto load = eval::load_dataset(*config.value().dataset);
    if (!load.has_value()) {
      std::cerr << load.error() << "\n";
      return 1;
    }
    gold = gold_of(load.value().problems);
  } else {
    auto family =
        agents::make_synthetic_problems(config.value().synthetic.problems);
    std::vector<agents::Problem> problems;
    for (const auto& sp : family) problems.push_back(sp.problem);
    gold = gold_of(problems);
  }

  std::vector<std::string> orphans;
  for (const agents::RunRecord& r : records.value())
    if (!gold.count(r.problem_id)) orphans.push_back(r.problem_id);
  if (!orphans.empty()) {
    std::cerr << "records reference problems absent from the dataset:";
    for (const std::string& id : orphans) std::cerr << " " << id;
    std::cerr << "\n";
    return 1;
  }

  eval::Metrics metrics = eval::compute_metrics(records.value(), gold);
  auto emitted =
      eval::emit_report(metrics, records.value(), config.value().output_dir,
                        cli::config_echo(config.value()));
  if (!emitted.has_value()) {
    std::cerr << emitted.error() << "\n";
    return 1;
  }

  if (at_round >= 0) {
    if (static_cast<std::size_t>(at_round) >=
        metrics.per_round_accuracy.size()) {
      std::cerr << "--at-round " << at_round << " is out of range (max "
                << metrics.per_round_accuracy.size() - 1 << ")\n";
      return 1;
    }
    std::printf("round %d: accuracy=%.4f corrected=%zu reverted=%zu\n",
                at_round,
                metrics.per_round_accuracy[static_cast<std::size_t>(at_round)],
                metrics.corrected_per_round[static_cast<std::size_t>(at_round)],
                metrics.reverted_per_round[static_cast<std::size_t>(at_round)]);
    return 0;
  }
  print_summary(metrics, global.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "resolute: formulation parsing, resolution proving, and "
      "refinement-loop runs"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--config", global.config_path,
                 "Run configuration file (JSON)");
  app.add_option("--out", global.out_dir, "Output directory override");
  app.add_flag("--json", global.json, "Machine-readable output");
  app.add_flag("--verbose", global.verbose, "Report progress on stderr");

  auto* parse_cmd =
      app.add_subcommand("parse", "Parse a formulation program file");
  parse_cmd->fallthrough();
  std::string parse_file;
  parse_cmd->add_option("file", parse_file, "Program file")->required();

  auto* prove_cmd =
      app.add_subcommand("prove", "Run the resolution prover on a program");
  prove_cmd->fallthrough();
  std::string prove_file;
  prover::ResourceLimits limits;
  std::string trace_path;
  prove_cmd->add_option("file", prove_file, "Program file")->required();
  prove_cmd->add_option("--max-clauses", limits.max_clauses,
                        "Kept-clause budget");
  prove_cmd->add_option("--max-seconds", limits.max_seconds,
                        "Wall-clock budget per saturation run");
  prove_cmd->add_option("--max-clause-weight", limits.max_clause_weight,
                        "Largest clause weight kept");
  prove_cmd->add_option("--trace", trace_path,
                        "Write the refutation trace to this file");

  RunOverrides overrides;
  auto add_overrides = [&overrides](CLI::App* cmd) {
    cmd->add_option("--backtracking", overrides.backtracking,
                    "Override backtracking: on or off");
    cmd->add_option("--max-rounds", overrides.max_rounds,
                    "Override the refinement round budget");
    cmd->add_option("--seed", overrides.seed, "Override the run seed");
    cmd->add_option("--model", overrides.model, "Override the model name");
  };

  auto* run_cmd =
      app.add_subcommand("run", "Run the refinement loop over a dataset");
  run_cmd->fallthrough();
  add_overrides(run_cmd);

  auto* eval_cmd =
      app.add_subcommand("eval", "Recompute metrics from saved records");
  eval_cmd->fallthrough();
  std::string records_path;
  int at_round = -1;
  eval_cmd->add_option("records", records_path, "records.jsonl from a run")
      ->required();
  eval_cmd->add_option("--at-round", at_round,
                       "Print the per-round slice at this round");

  auto* replay_cmd = app.add_subcommand(
      "replay", "Re-run against a recorded transcript, strictly");
  replay_cmd->fallthrough();
  std::string transcript_override;
  replay_cmd->add_option("--transcript", transcript_override,
                         "Transcript file (overrides the config)");
  add_overrides(replay_cmd);

  CLI11_PARSE(app, argc, argv);

  if (parse_cmd->parsed()) return cmd_parse(global, parse_file);
  if (prove_cmd->parsed())
    return cmd_prove(global, prove_file, limits, trace_path);
  if (run_cmd->parsed()) return cmd_run(global, overrides);
  if (eval_cmd->parsed()) return cmd_eval(global, records_path, at_round);
  if (replay_cmd->parsed())
    return cmd_replay(global, overrides, transcript_override);
  return 1;
}
