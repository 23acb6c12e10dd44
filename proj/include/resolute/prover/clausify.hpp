// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "resolute/fol/ast.hpp"
#include "resolute/prover/clause.hpp"

namespace resolute::prover {

// Converts formulas to clause normal form: universal closure, negation
// normal form, standardizing bound variables apart, Skolemization, and
// distribution to CNF. Tautologous clauses are dropped and each surviving
// clause is canonicalized.
//
// `extra` is clausified after the premises; callers pass the negated goal
// for a refutation attempt or the goal itself for a disproof attempt.
// Skolem symbols are numbered sk0, sk1, ... afresh within each call.
std::vector<Clause> clausify(const std::vector<fol::FormulaPtr>& premises,
                             const fol::FormulaPtr& extra);

}  // namespace resolute::prover
