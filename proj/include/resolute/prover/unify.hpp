// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resolute/fol/ast.hpp"
#include "resolute/prover/clause.hpp"

namespace resolute::prover {

// Variable-to-term binding map. Unifiers produced here are idempotent:
// no bound variable appears in any right-hand side.
using Subst = std::map<std::string, fol::Term>;

fol::Term apply_subst(const fol::Term& t, const Subst& s);
Literal apply_subst(const Literal& l, const Subst& s);
Clause apply_subst(const Clause& c, const Subst& s);

bool occurs(const std::string& var, const fol::Term& t);

// Most general unifier with occurs check; std::nullopt on clash or an
// occurs-check violation.
std::optional<Subst> unify(const fol::Term& a, const fol::Term& b);

// Unifies two argument vectors pairwise; they must have equal length.
std::optional<Subst> unify_args(const std::vector<fol::Term>& a,
                                const std::vector<fol::Term>& b);

// "{x -> 'a', y -> f(z)}"; bindings in lexicographic variable order.
std::string render_subst(const Subst& s);

}  // namespace resolute::prover
