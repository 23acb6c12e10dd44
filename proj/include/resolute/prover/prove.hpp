// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "resolute/fol/diagnostics.hpp"
#include "resolute/fol/program.hpp"
#include "resolute/prover/saturate.hpp"

namespace resolute::prover {

enum class Outcome { Proved, Disproved, Unknown, ExecutionError };

// "PROVED", "DISPROVED", "UNKNOWN", "EXECUTION_ERROR".
std::string_view outcome_name(Outcome o);
std::optional<Outcome> outcome_from_name(std::string_view name);

struct SolverStats {
  std::size_t clauses_generated = 0;  // summed over both saturation runs
  std::size_t clauses_kept = 0;
  double elapsed_seconds = 0.0;
  // Distinguishes "saturated without refutation" from "resources ran out",
  // which the Unknown outcome alone conflates.
  std::optional<SatStatus> refutation_run;  // premises ∪ {¬goal}
  std::optional<SatStatus> disproof_run;    // premises ∪ {goal}

  friend bool operator==(const SolverStats& a, const SolverStats& b) {
    return a.clauses_generated == b.clauses_generated &&
           a.clauses_kept == b.clauses_kept &&
           a.refutation_run == b.refutation_run &&
           a.disproof_run == b.disproof_run;
  }
};

struct SolverVerdict {
  Outcome outcome = Outcome::Unknown;
  // Populated only for ExecutionError: what was wrong with the input.
  std::vector<fol::ParseDiagnostic> diagnostics;
  SolverStats stats;
  // Refutation trace for Proved (from premises ∪ {¬goal}) or Disproved
  // (from premises ∪ {goal}); empty otherwise.
  std::vector<TraceStep> trace;
};

// Refutation first: premises ∪ {¬goal} refuted → Proved. Otherwise
// premises ∪ {goal} refuted → Disproved. Otherwise Unknown. Each
// saturation run gets an independent copy of `limits`.
SolverVerdict prove(const fol::Formulation& f, const ResourceLimits& limits);

// Convenience for callers that discover bad input before reaching the
// saturation loop.
SolverVerdict execution_error(std::vector<fol::ParseDiagnostic> diagnostics);

}  // namespace resolute::prover
