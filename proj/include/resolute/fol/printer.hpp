// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "resolute/fol/ast.hpp"

namespace resolute::fol {

std::string render_term(const Term& t);

// Canonical Unicode rendering with minimal parentheses.
// parse_formula(render_formula(f)) is alpha-equivalent to f.
std::string render_formula(const Formula& f);

// Indented tree view, one node per line (used by the parse command).
std::string render_ast(const Formula& f);

}  // namespace resolute::fol
