// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "resolute/fol/ast.hpp"
#include "resolute/fol/diagnostics.hpp"
#include "resolute/result.hpp"

namespace resolute::fol {

struct PredicateDecl {
  std::string name;
  int arity = 0;
  std::string gloss;
};

struct Premise {
  FormulaPtr formula;
  std::string source;      // the sentence this premise came from, if given
  std::size_t offset = 0;  // line start in raw_text
};

// A parsed formulation program: declarations, premises, goal, and the raw
// model output it was extracted from. Premises with free variables are read
// under implicit universal closure; the goal must be closed.
struct Formulation {
  std::vector<PredicateDecl> declarations;
  std::vector<Premise> premises;
  FormulaPtr goal;
  std::string raw_text;
};

// Parses the three-section block format:
//
//   Predicates:
//   Name/arity ::: gloss
//   Premises:
//   formula ::: source sentence
//   Conclusion:
//   formula
//
// Surrounding prose is tolerated; extraction takes the first fenced or
// section-delimited block. All diagnostics are collected, including
// declaration/arity/closedness violations.
Result<Formulation, std::vector<ParseDiagnostic>> parse_program(
    std::string_view text);

// Declaration and closedness checks, usable on any Formulation.
// `goal_offset` anchors goal-related diagnostics inside raw_text.
std::vector<ParseDiagnostic> validate_formulation(const Formulation& f,
                                                  std::size_t goal_offset = 0);

// Canonical three-section rendering (inverse of parse_program up to
// formatting).
std::string render_program(const Formulation& f);

}  // namespace resolute::fol
