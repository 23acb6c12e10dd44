// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "resolute/fol/ast.hpp"
#include "resolute/fol/diagnostics.hpp"
#include "resolute/result.hpp"

namespace resolute::fol {

// Parses a single formula. Accepts both Unicode (∀ ∃ ¬ ∧ ∨ → ↔) and ASCII
// (all, exists, -, ~, &, |, ->, <->) operator spellings. Precedence
// ¬ > ∧ > ∨ > → > ↔ with right-associative → and ↔; quantifiers bind their
// following unary formula. Total on arbitrary bytes: returns a diagnostic
// instead of throwing, with a nesting-depth cap.
Result<FormulaPtr, ParseDiagnostic> parse_formula(std::string_view text);

// Parses a single term (used by tooling and tests).
Result<Term, ParseDiagnostic> parse_term(std::string_view text);

bool is_variable_name(std::string_view name);
bool is_constant_name(std::string_view name);
bool is_predicate_name(std::string_view name);

}  // namespace resolute::fol
