// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "resolute/fol/program.hpp"
#include "resolute/result.hpp"

namespace resolute::prover {

enum class EnumOutcome { Entailed, Contradicted, Contingent, Inconclusive };

// "ENTAILED", "CONTRADICTED", "CONTINGENT", "INCONCLUSIVE".
std::string_view enum_outcome_name(EnumOutcome o);

// Brute-force entailment check over every interpretation with a domain of
// size 1..max_domain: all constant assignments crossed with all predicate
// extensions (searched with pruning rather than literal enumeration).
//
//   Entailed      every premise model satisfies the goal (and one exists)
//   Contradicted  every premise model falsifies the goal (and one exists)
//   Contingent    premise models exist on both sides
//   Inconclusive  no premise model within max_domain
//
// Completely independent of the resolution path, so it can referee it.
// Function symbols are outside the oracle's remit and yield an error.
Result<EnumOutcome, std::string> enumerate_entailment(
    const fol::Formulation& f, std::size_t max_domain);

}  // namespace resolute::prover
