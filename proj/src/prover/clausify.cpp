// SPDX-License-Identifier: Apache-2.0
#include "resolute/prover/clausify.hpp"

#include <map>
#include <string>

namespace resolute::prover {

namespace {

using fol::Formula;
using fol::FormulaPtr;
using fol::Term;

// Negation normal form. `neg` tracks a pending negation being pushed down.
FormulaPtr nnf(const FormulaPtr& f, bool neg) {
  switch (f->kind) {
    case Formula::Kind::Predicate:
      return neg ? fol::mk_not(f) : f;
    case Formula::Kind::Not:
      return nnf(f->lhs, !neg);
    case Formula::Kind::And:
      return neg ? fol::mk_or(nnf(f->lhs, true), nnf(f->rhs, true))
                 : fol::mk_and(nnf(f->lhs, false), nnf(f->rhs, false));
    case Formula::Kind::Or:
      return neg ? fol::mk_and(nnf(f->lhs, true), nnf(f->rhs, true))
                 : fol::mk_or(nnf(f->lhs, false), nnf(f->rhs, false));
    case Formula::Kind::Implies:
      return neg ? fol::mk_and(nnf(f->lhs, false), nnf(f->rhs, true))
                 : fol::mk_or(nnf(f->lhs, true), nnf(f->rhs, false));
    case Formula::Kind::Iff:
      // A↔B becomes (¬A∨B)∧(¬B∨A); negated, (A∨B)∧(¬A∨¬B).
      return neg ? fol::mk_and(
                       fol::mk_or(nnf(f->lhs, false), nnf(f->rhs, false)),
                       fol::mk_or(nnf(f->lhs, true), nnf(f->rhs, true)))
                 : fol::mk_and(
                       fol::mk_or(nnf(f->lhs, true), nnf(f->rhs, false)),
                       fol::mk_or(nnf(f->rhs, true), nnf(f->lhs, false)));
    case Formula::Kind::ForAll:
      return neg ? fol::mk_exists(f->name, nnf(f->lhs, true))
                 : fol::mk_forall(f->name, nnf(f->lhs, false));
    case Formula::Kind::Exists:
      return neg ? fol::mk_forall(f->name, nnf(f->lhs, true))
                 : fol::mk_exists(f->name, nnf(f->lhs, false));
  }
  return f;  // unreachable
}

Term rename_in_term(const Term& t,
                    const std::map<std::string, std::string>& env) {
  if (t.kind == Term::Kind::Variable) {
    auto it = env.find(t.name);
    return it == env.end() ? t : Term::var(it->second);
  }
  Term out = t;
  for (auto& a : out.args) a = rename_in_term(a, env);
  return out;
}

// Gives every binder a fresh variable name (v0, v1, ...) so no two
// quantifiers share one and Skolemization cannot capture.
FormulaPtr standardize(const FormulaPtr& f,
                       std::map<std::string, std::string> env,
                       std::size_t& next) {
  switch (f->kind) {
    case Formula::Kind::Predicate: {
      std::vector<Term> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(rename_in_term(a, env));
      return fol::mk_pred(f->name, std::move(args));
    }
    case Formula::Kind::Not:
      return fol::mk_not(standardize(f->lhs, env, next));
    case Formula::Kind::And:
      return fol::mk_and(standardize(f->lhs, env, next),
                         standardize(f->rhs, env, next));
    case Formula::Kind::Or:
      return fol::mk_or(standardize(f->lhs, env, next),
                        standardize(f->rhs, env, next));
    case Formula::Kind::Implies:
      return fol::mk_implies(standardize(f->lhs, env, next),
                             standardize(f->rhs, env, next));
    case Formula::Kind::Iff:
      return fol::mk_iff(standardize(f->lhs, env, next),
                         standardize(f->rhs, env, next));
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      std::string fresh = "v" + std::to_string(next++);
      env[f->name] = fresh;
      auto body = standardize(f->lhs, env, next);
      return f->kind == Formula::Kind::ForAll ? fol::mk_forall(fresh, body)
                                              : fol::mk_exists(fresh, body);
    }
  }
  return f;  // unreachable
}

Term subst_term(const Term& t, const std::string& var, const Term& value) {
  if (t.kind == Term::Kind::Variable)
    return t.name == var ? value : t;
  Term out = t;
  for (auto& a : out.args) a = subst_term(a, var, value);
  return out;
}

FormulaPtr subst_formula(const FormulaPtr& f, const std::string& var,
                         const Term& value) {
  switch (f->kind) {
    case Formula::Kind::Predicate: {
      std::vector<Term> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(subst_term(a, var, value));
      return fol::mk_pred(f->name, std::move(args));
    }
    case Formula::Kind::Not:
      return fol::mk_not(subst_formula(f->lhs, var, value));
    case Formula::Kind::And:
      return fol::mk_and(subst_formula(f->lhs, var, value),
                         subst_formula(f->rhs, var, value));
    case Formula::Kind::Or:
      return fol::mk_or(subst_formula(f->lhs, var, value),
                        subst_formula(f->rhs, var, value));
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      // Gone after NNF; nothing to do.
      return f;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      if (f->name == var) return f;  // shadowed (cannot happen once standardized)
      auto body = subst_formula(f->lhs, var, value);
      return f->kind == Formula::Kind::ForAll ? fol::mk_forall(f->name, body)
                                              : fol::mk_exists(f->name, body);
    }
  }
  return f;  // unreachable
}

// Replaces each existential variable with a Skolem constant sk<n> (no
// enclosing universals) or Skolem function sk<n>(x1..xk).
FormulaPtr skolemize(const FormulaPtr& f, std::vector<std::string>& scope,
                     std::size_t& next_sk) {
  switch (f->kind) {
    case Formula::Kind::Predicate:
    case Formula::Kind::Not:
      return f;
    case Formula::Kind::And:
      return fol::mk_and(skolemize(f->lhs, scope, next_sk),
                         skolemize(f->rhs, scope, next_sk));
    case Formula::Kind::Or:
      return fol::mk_or(skolemize(f->lhs, scope, next_sk),
                        skolemize(f->rhs, scope, next_sk));
    case Formula::Kind::ForAll: {
      scope.push_back(f->name);
      auto body = skolemize(f->lhs, scope, next_sk);
      scope.pop_back();
      return fol::mk_forall(f->name, body);
    }
    case Formula::Kind::Exists: {
      std::string sym = "sk" + std::to_string(next_sk++);
      Term witness;
      if (scope.empty()) {
        witness = Term::constant(sym);
      } else {
        std::vector<Term> args;
        args.reserve(scope.size());
        for (const auto& v : scope) args.push_back(Term::var(v));
        witness = Term::func(sym, std::move(args));
      }
      return skolemize(subst_formula(f->lhs, f->name, witness), scope,
                       next_sk);
    }
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return f;  // gone after NNF
  }
  return f;  // unreachable
}

// Distributes ∨ over ∧. Quantifiers are skipped (∀ binders are implicit in
// clause form by this point).
void cnf(const FormulaPtr& f, std::vector<std::vector<Literal>>& out) {
  switch (f->kind) {
    case Formula::Kind::Predicate:
      out.push_back({Literal{true, f->name, f->args}});
      return;
    case Formula::Kind::Not:
      out.push_back({Literal{false, f->lhs->name, f->lhs->args}});
      return;
    case Formula::Kind::And: {
      cnf(f->lhs, out);
      cnf(f->rhs, out);
      return;
    }
    case Formula::Kind::Or: {
      std::vector<std::vector<Literal>> left, right;
      cnf(f->lhs, left);
      cnf(f->rhs, right);
      for (const auto& a : left)
        for (const auto& b : right) {
          std::vector<Literal> merged = a;
          merged.insert(merged.end(), b.begin(), b.end());
          out.push_back(std::move(merged));
        }
      return;
    }
    case Formula::Kind::ForAll:
      cnf(f->lhs, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return;  // unreachable after the earlier passes
  }
}

}  // namespace

std::vector<Clause> clausify(const std::vector<fol::FormulaPtr>& premises,
                             const fol::FormulaPtr& extra) {
  std::vector<fol::FormulaPtr> inputs = premises;
  if (extra) inputs.push_back(extra);

  std::size_t next_var = 0;
  std::size_t next_sk = 0;
  std::vector<Clause> out;
  for (const auto& formula : inputs) {
    auto closed = fol::universal_closure(formula);
    auto normal = nnf(closed, false);
    auto apart = standardize(normal, {}, next_var);
    std::vector<std::string> scope;
    auto ground = skolemize(apart, scope, next_sk);
    std::vector<std::vector<Literal>> raw;
    cnf(ground, raw);
    for (auto& lits : raw) {
      Clause c = canonicalize(Clause{std::move(lits)});
      if (!is_tautology(c)) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace resolute::prover
