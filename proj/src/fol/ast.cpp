// SPDX-License-Identifier: Apache-2.0
#include "resolute/fol/ast.hpp"

#include <algorithm>
#include <map>

namespace resolute::fol {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<Formula>(std::move(f)); }

}  // namespace

FormulaPtr mk_pred(std::string name, std::vector<Term> args) {
  return make({Formula::Kind::Predicate, std::move(name), std::move(args),
               nullptr, nullptr});
}

FormulaPtr mk_not(FormulaPtr f) {
  return make({Formula::Kind::Not, {}, {}, std::move(f), nullptr});
}

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return make({Formula::Kind::And, {}, {}, std::move(a), std::move(b)});
}

FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return make({Formula::Kind::Or, {}, {}, std::move(a), std::move(b)});
}

FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return make({Formula::Kind::Implies, {}, {}, std::move(a), std::move(b)});
}

FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) {
  return make({Formula::Kind::Iff, {}, {}, std::move(a), std::move(b)});
}

FormulaPtr mk_forall(std::string var, FormulaPtr body) {
  return make(
      {Formula::Kind::ForAll, std::move(var), {}, std::move(body), nullptr});
}

FormulaPtr mk_exists(std::string var, FormulaPtr body) {
  return make(
      {Formula::Kind::Exists, std::move(var), {}, std::move(body), nullptr});
}

bool is_quantifier(Formula::Kind k) {
  return k == Formula::Kind::ForAll || k == Formula::Kind::Exists;
}

bool is_binary(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return true;
    default:
      return false;
  }
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::Predicate:
      return a.name == b.name && a.args == b.args;
    case Formula::Kind::Not:
      return equal(*a.lhs, *b.lhs);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return a.name == b.name && equal(*a.lhs, *b.lhs);
    default:
      return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
}

namespace {

using VarMap = std::map<std::string, int>;

bool alpha_term(const Term& a, const Term& b, const VarMap& la,
                const VarMap& lb) {
  if (a.kind != b.kind) return false;
  if (a.kind == Term::Kind::Variable) {
    auto ia = la.find(a.name);
    auto ib = lb.find(b.name);
    if (ia == la.end() || ib == lb.end())
      return ia == la.end() && ib == lb.end() && a.name == b.name;
    return ia->second == ib->second;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!alpha_term(a.args[i], b.args[i], la, lb)) return false;
  return true;
}

bool alpha_rec(const Formula& a, const Formula& b, VarMap la, VarMap lb,
               int depth) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::Predicate: {
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!alpha_term(a.args[i], b.args[i], la, lb)) return false;
      return true;
    }
    case Formula::Kind::Not:
      return alpha_rec(*a.lhs, *b.lhs, std::move(la), std::move(lb), depth);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      la[a.name] = depth;
      lb[b.name] = depth;
      return alpha_rec(*a.lhs, *b.lhs, std::move(la), std::move(lb),
                       depth + 1);
    }
    default:
      return alpha_rec(*a.lhs, *b.lhs, la, lb, depth) &&
             alpha_rec(*a.rhs, *b.rhs, la, lb, depth);
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  return alpha_rec(a, b, {}, {}, 0);
}

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Variable) {
    out.insert(t.name);
    return;
  }
  for (const Term& a : t.args) collect_variables(a, out);
}

namespace {

void free_rec(const Formula& f, std::set<std::string>& bound,
              std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Predicate: {
      std::set<std::string> vars;
      for (const Term& t : f.args) collect_variables(t, vars);
      for (const auto& v : vars)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not:
      free_rec(*f.lhs, bound, out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      bool inserted = bound.insert(f.name).second;
      free_rec(*f.lhs, bound, out);
      if (inserted) bound.erase(f.name);
      return;
    }
    default:
      free_rec(*f.lhs, bound, out);
      free_rec(*f.rhs, bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_rec(f, bound, out);
  return out;
}

FormulaPtr universal_closure(FormulaPtr f) {
  auto free = free_variables(*f);
  // Innermost quantifier binds the last name; wrap in reverse order so the
  // rendered prefix reads in sorted order.
  for (auto it = free.rbegin(); it != free.rend(); ++it)
    f = mk_forall(*it, std::move(f));
  return f;
}

int formula_depth(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Predicate:
      return 0;
    case Formula::Kind::Not:
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      return 1 + formula_depth(*f.lhs);
    default:
      return 1 + std::max(formula_depth(*f.lhs), formula_depth(*f.rhs));
  }
}

}  // namespace resolute::fol
