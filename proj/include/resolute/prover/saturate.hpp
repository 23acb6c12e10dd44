// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "resolute/prover/clause.hpp"
#include "resolute/prover/unify.hpp"

namespace resolute::prover {

struct ResourceLimits {
  std::size_t max_clauses = 100000;   // kept clauses across the run
  double max_seconds = 10.0;          // wall clock, checked between iterations
  std::size_t max_clause_weight = 100;
};

enum class SatStatus { Refuted, Saturated, ResourceOut };

// One kept clause. Input steps have no parents; Resolve steps cite two
// parent ids plus the resolved-upon literal index in each; Factor steps
// cite one parent and the two unified literal indices. Substitutions range
// over the first parent's variables (x*) and, for Resolve, the second
// parent's variables renamed to y*.
struct TraceStep {
  enum class Kind { Input, Resolve, Factor };

  std::size_t id = 0;
  Clause clause;  // canonical form, as kept by the loop
  Kind kind = Kind::Input;
  std::size_t parent1 = 0;
  std::size_t parent2 = 0;  // Resolve only
  std::size_t lit1 = 0;
  std::size_t lit2 = 0;
  Subst subst;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SaturationStats {
  std::size_t generated = 0;           // resolvents and factors produced
  std::size_t kept = 0;                // survived all filters
  std::size_t subsumed = 0;            // given clauses discarded at selection
  std::size_t discarded_by_weight = 0;
  std::size_t iterations = 0;
  double elapsed_seconds = 0.0;

  // Wall-clock time is measurement noise, not part of the deterministic
  // footprint.
  friend bool operator==(const SaturationStats& a, const SaturationStats& b) {
    return a.generated == b.generated && a.kept == b.kept &&
           a.subsumed == b.subsumed &&
           a.discarded_by_weight == b.discarded_by_weight &&
           a.iterations == b.iterations;
  }
};

struct SaturationResult {
  SatStatus status = SatStatus::Saturated;
  // Refutation slice: the empty clause, its ancestors, and nothing else,
  // in ascending id order. Empty unless status == Refuted.
  std::vector<TraceStep> trace;
  SaturationStats stats;
};

// Given-clause loop: lightest clause first with FIFO tie-breaking, forward
// subsumption against the processed set, binary resolution plus factoring.
// Refuted as soon as the empty clause appears. Saturated only when every
// clause was processed with nothing discarded for weight; a weight-capped
// exhaustion reports ResourceOut because completeness was forfeited.
SaturationResult saturate(const std::vector<Clause>& input,
                          const ResourceLimits& limits);

// Re-derives every Resolve/Factor step from its recorded parents and
// checks both the clause and the substitution. False on any mismatch or
// dangling parent reference.
bool verify_trace(const std::vector<TraceStep>& trace);

// One step per line: "2: Q('a') <- resolve(0@1, 1@0, {x0 -> 'a'})".
std::string render_trace(const std::vector<TraceStep>& trace);

std::string_view sat_status_name(SatStatus s);

}  // namespace resolute::prover
