// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "resolute/fol/ast.hpp"

namespace resolute::prover {

// A literal is a possibly negated application of a predicate to terms.
struct Literal {
  bool positive = true;
  std::string pred;
  std::vector<fol::Term> args;

  friend int compare(const Literal& a, const Literal& b) {
    if (a.positive != b.positive) return a.positive ? 1 : -1;
    if (int c = a.pred.compare(b.pred); c != 0) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size())
      return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return 0;
  }
  friend bool operator==(const Literal& a, const Literal& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    return compare(a, b) < 0;
  }
};

// A clause is a disjunction of literals. The saturation loop only ever
// stores clauses in canonical form: duplicates removed, literals sorted,
// variables renamed x0, x1, ... in first-occurrence order.
struct Clause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }

  friend int compare(const Clause& a, const Clause& b) {
    if (a.literals.size() != b.literals.size())
      return a.literals.size() < b.literals.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.literals.size(); ++i)
      if (int c = compare(a.literals[i], b.literals[i]); c != 0) return c;
    return 0;
  }
  friend bool operator==(const Clause& a, const Clause& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Clause& a, const Clause& b) {
    return compare(a, b) < 0;
  }
};

// Total number of predicate and term symbols. The saturation loop prefers
// lighter clauses.
std::size_t clause_weight(const Clause& c);

// Canonical spelling: literals sorted with a variable-insensitive key,
// variables renamed x0, x1, ... by first occurrence, then fully sorted and
// deduplicated. Alpha-variant clauses normalize to one spelling.
Clause canonicalize(const Clause& c);

// True when the clause contains a literal and its exact negation.
bool is_tautology(const Clause& c);

// True when `general` theta-subsumes `specific`: a substitution of
// `general`'s variables maps every literal of `general` onto some literal
// of `specific`.
bool subsumes(const Clause& general, const Clause& specific);

std::string render_literal(const Literal& l);

// "¬P(x0) ∨ Q(x0)"; the empty clause renders as "⊥".
std::string render_clause(const Clause& c);

}  // namespace resolute::prover
