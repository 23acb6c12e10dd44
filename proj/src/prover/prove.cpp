// SPDX-License-Identifier: Apache-2.0
#include "resolute/prover/prove.hpp"

#include "resolute/prover/clausify.hpp"

namespace resolute::prover {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Proved:
      return "PROVED";
    case Outcome::Disproved:
      return "DISPROVED";
    case Outcome::Unknown:
      return "UNKNOWN";
    case Outcome::ExecutionError:
      return "EXECUTION_ERROR";
  }
  return "?";
}

std::optional<Outcome> outcome_from_name(std::string_view name) {
  if (name == "PROVED") return Outcome::Proved;
  if (name == "DISPROVED") return Outcome::Disproved;
  if (name == "UNKNOWN") return Outcome::Unknown;
  if (name == "EXECUTION_ERROR") return Outcome::ExecutionError;
  return std::nullopt;
}

SolverVerdict prove(const fol::Formulation& f, const ResourceLimits& limits) {
  SolverVerdict verdict;
  std::vector<fol::FormulaPtr> premises;
  premises.reserve(f.premises.size());
  for (const auto& p : f.premises) premises.push_back(p.formula);

  auto account = [&](const SaturationResult& run) {
    verdict.stats.clauses_generated += run.stats.generated;
    verdict.stats.clauses_kept += run.stats.kept;
    verdict.stats.elapsed_seconds += run.stats.elapsed_seconds;
  };

  auto refutation = saturate(clausify(premises, fol::mk_not(f.goal)), limits);
  account(refutation);
  verdict.stats.refutation_run = refutation.status;
  if (refutation.status == SatStatus::Refuted) {
    verdict.outcome = Outcome::Proved;
    verdict.trace = std::move(refutation.trace);
    return verdict;
  }

  auto disproof = saturate(clausify(premises, f.goal), limits);
  account(disproof);
  verdict.stats.disproof_run = disproof.status;
  if (disproof.status == SatStatus::Refuted) {
    verdict.outcome = Outcome::Disproved;
    verdict.trace = std::move(disproof.trace);
    return verdict;
  }

  verdict.outcome = Outcome::Unknown;
  return verdict;
}

SolverVerdict execution_error(std::vector<fol::ParseDiagnostic> diagnostics) {
  SolverVerdict verdict;
  verdict.outcome = Outcome::ExecutionError;
  verdict.diagnostics = std::move(diagnostics);
  return verdict;
}

}  // namespace resolute::prover
