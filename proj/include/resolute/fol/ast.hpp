// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace resolute::fol {

// First-order term. Variables and constants are leaves; functions carry
// at least one argument. Variables are single lowercase letters optionally
// followed by digits; everything else lowercase is a constant.
struct Term {
  enum class Kind { Variable, Constant, Function };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;  // Function only

  static Term var(std::string n) { return {Kind::Variable, std::move(n), {}}; }
  static Term constant(std::string n) {
    return {Kind::Constant, std::move(n), {}};
  }
  static Term func(std::string n, std::vector<Term> a) {
    return {Kind::Function, std::move(n), std::move(a)};
  }

  bool is_var() const { return kind == Kind::Variable; }

  friend bool operator==(const Term& a, const Term& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const Term& a, const Term& b) {
    return compare(a, b) < 0;
  }

  // Single-pass three-way comparison. Hand-written for two reasons: a
  // defaulted <=> on a vector-recursive type trips a self-referential
  // constraint check in libstdc++ 11, and the synthesized fallback
  // (t<u, then u<t) doubles the walk per level, which is exponential on
  // deep equal terms.
  friend int compare(const Term& a, const Term& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size())
      return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return 0;
  }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Formula node. `name` holds the predicate name (Predicate) or the bound
// variable (ForAll/Exists). Unary nodes and quantifiers use `lhs` only.
struct Formula {
  enum class Kind { Predicate, Not, And, Or, Implies, Iff, ForAll, Exists };

  Kind kind = Kind::Predicate;
  std::string name;
  std::vector<Term> args;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

FormulaPtr mk_pred(std::string name, std::vector<Term> args = {});
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(std::string var, FormulaPtr body);
FormulaPtr mk_exists(std::string var, FormulaPtr body);

bool is_quantifier(Formula::Kind k);
bool is_binary(Formula::Kind k);

// Structural equality (bound variable names matter).
bool equal(const Formula& a, const Formula& b);

// Equality up to renaming of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);

void collect_variables(const Term& t, std::set<std::string>& out);
std::set<std::string> free_variables(const Formula& f);

// Wraps f in universal quantifiers over its free variables, sorted by name.
FormulaPtr universal_closure(FormulaPtr f);

// Maximum nesting depth (terms within a predicate count as depth 0).
int formula_depth(const Formula& f);

}  // namespace resolute::fol
