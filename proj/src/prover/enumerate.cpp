// SPDX-License-Identifier: Apache-2.0
#include "resolute/prover/enumerate.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace resolute::prover {

std::string_view enum_outcome_name(EnumOutcome o) {
  switch (o) {
    case EnumOutcome::Entailed:
      return "ENTAILED";
    case EnumOutcome::Contradicted:
      return "CONTRADICTED";
    case EnumOutcome::Contingent:
      return "CONTINGENT";
    case EnumOutcome::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

using fol::Formula;
using fol::FormulaPtr;
using fol::Term;

enum class Tri : std::int8_t { False, True, Open };

// Quantifier-free formula grounded over a finite domain; leaves are
// indices into a shared atom table.
struct Ground {
  enum class Kind { Atom, Not, And, Or };
  Kind kind = Kind::Atom;
  int atom = -1;
  std::vector<Ground> kids;
};

struct Grounder {
  std::size_t domain = 1;
  const std::map<std::string, std::size_t>* constants = nullptr;
  std::map<std::string, int> atom_ids;

  int atom_for(const std::string& pred, const std::vector<std::size_t>& elems) {
    std::string key = pred;
    for (auto e : elems) key += "," + std::to_string(e);
    auto [it, _] = atom_ids.emplace(key, static_cast<int>(atom_ids.size()));
    return it->second;
  }

  Ground ground(const Formula& f, std::map<std::string, std::size_t>& env,
                bool neg) {
    switch (f.kind) {
      case Formula::Kind::Predicate: {
        std::vector<std::size_t> elems;
        elems.reserve(f.args.size());
        for (const auto& a : f.args)
          elems.push_back(a.kind == Term::Kind::Variable ? env.at(a.name)
                                                         : constants->at(a.name));
        Ground g;
        g.atom = atom_for(f.name, elems);
        if (!neg) return g;
        Ground n;
        n.kind = Ground::Kind::Not;
        n.kids.push_back(std::move(g));
        return n;
      }
      case Formula::Kind::Not:
        return ground(*f.lhs, env, !neg);
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        bool conj = (f.kind == Formula::Kind::And) != neg;
        Ground g;
        g.kind = conj ? Ground::Kind::And : Ground::Kind::Or;
        g.kids.push_back(ground(*f.lhs, env, neg));
        g.kids.push_back(ground(*f.rhs, env, neg));
        return g;
      }
      case Formula::Kind::Implies: {
        Ground g;
        g.kind = neg ? Ground::Kind::And : Ground::Kind::Or;
        g.kids.push_back(ground(*f.lhs, env, !neg));
        g.kids.push_back(ground(*f.rhs, env, neg));
        return g;
      }
      case Formula::Kind::Iff: {
        // (A→B) ∧ (B→A), negated (A∨B) ∧ (¬A∨¬B).
        Ground g;
        g.kind = Ground::Kind::And;
        Ground l, r;
        l.kind = Ground::Kind::Or;
        r.kind = Ground::Kind::Or;
        if (!neg) {
          l.kids.push_back(ground(*f.lhs, env, true));
          l.kids.push_back(ground(*f.rhs, env, false));
          r.kids.push_back(ground(*f.rhs, env, true));
          r.kids.push_back(ground(*f.lhs, env, false));
        } else {
          l.kids.push_back(ground(*f.lhs, env, false));
          l.kids.push_back(ground(*f.rhs, env, false));
          r.kids.push_back(ground(*f.lhs, env, true));
          r.kids.push_back(ground(*f.rhs, env, true));
        }
        g.kids.push_back(std::move(l));
        g.kids.push_back(std::move(r));
        return g;
      }
      case Formula::Kind::ForAll:
      case Formula::Kind::Exists: {
        bool conj = (f.kind == Formula::Kind::ForAll) != neg;
        Ground g;
        g.kind = conj ? Ground::Kind::And : Ground::Kind::Or;
        for (std::size_t e = 0; e < domain; ++e) {
          env[f.name] = e;
          g.kids.push_back(ground(*f.lhs, env, neg));
        }
        env.erase(f.name);
        return g;
      }
    }
    return {};  // unreachable
  }
};

// Kleene three-valued evaluation under a partial atom assignment.
Tri eval3(const Ground& g, const std::vector<std::int8_t>& assign) {
  switch (g.kind) {
    case Ground::Kind::Atom: {
      std::int8_t v = assign[static_cast<std::size_t>(g.atom)];
      return v < 0 ? Tri::Open : (v ? Tri::True : Tri::False);
    }
    case Ground::Kind::Not: {
      Tri v = eval3(g.kids[0], assign);
      if (v == Tri::Open) return Tri::Open;
      return v == Tri::True ? Tri::False : Tri::True;
    }
    case Ground::Kind::And: {
      bool open = false;
      for (const auto& k : g.kids) {
        Tri v = eval3(k, assign);
        if (v == Tri::False) return Tri::False;
        if (v == Tri::Open) open = true;
      }
      return open ? Tri::Open : Tri::True;
    }
    case Ground::Kind::Or: {
      bool open = false;
      for (const auto& k : g.kids) {
        Tri v = eval3(k, assign);
        if (v == Tri::True) return Tri::True;
        if (v == Tri::Open) open = true;
      }
      return open ? Tri::Open : Tri::False;
    }
  }
  return Tri::Open;  // unreachable
}

// First atom still open inside a not-yet-true subformula; drives the
// branching toward atoms that matter.
int pick_atom(const Ground& g, const std::vector<std::int8_t>& assign) {
  switch (g.kind) {
    case Ground::Kind::Atom:
      return assign[static_cast<std::size_t>(g.atom)] < 0 ? g.atom : -1;
    case Ground::Kind::Not:
      return pick_atom(g.kids[0], assign);
    case Ground::Kind::And:
    case Ground::Kind::Or:
      for (const auto& k : g.kids) {
        if (eval3(k, assign) != Tri::Open) continue;
        int a = pick_atom(k, assign);
        if (a >= 0) return a;
      }
      return -1;
  }
  return -1;
}

// Branch-and-prune search for an assignment making every conjunct true.
bool satisfiable(const std::vector<const Ground*>& conjuncts,
                 std::vector<std::int8_t>& assign) {
  const Ground* open = nullptr;
  for (const Ground* g : conjuncts) {
    Tri v = eval3(*g, assign);
    if (v == Tri::False) return false;
    if (v == Tri::Open && !open) open = g;
  }
  if (!open) return true;
  int atom = pick_atom(*open, assign);
  if (atom < 0) return false;  // defensive; an open formula has an open atom
  for (std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
    assign[static_cast<std::size_t>(atom)] = value;
    if (satisfiable(conjuncts, assign)) {
      assign[static_cast<std::size_t>(atom)] = -1;
      return true;
    }
  }
  assign[static_cast<std::size_t>(atom)] = -1;
  return false;
}

bool has_function(const Term& t) {
  return t.kind == Term::Kind::Function;
}

void collect_constants(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Constant) out.insert(t.name);
  for (const auto& a : t.args) collect_constants(a, out);
}

struct Scan {
  std::set<std::string> constants;
  const Term* function = nullptr;

  void visit(const Formula& f) {
    for (const auto& a : f.args) {
      if (!function && has_function(a)) function = &a;
      collect_constants(a, constants);
    }
    if (f.lhs) visit(*f.lhs);
    if (f.rhs) visit(*f.rhs);
  }
};

}  // namespace

Result<EnumOutcome, std::string> enumerate_entailment(
    const fol::Formulation& f, std::size_t max_domain) {
  std::vector<FormulaPtr> formulas;
  for (const auto& p : f.premises)
    formulas.push_back(fol::universal_closure(p.formula));
  FormulaPtr goal = fol::universal_closure(f.goal);

  Scan scan;
  for (const auto& g : formulas) scan.visit(*g);
  scan.visit(*goal);
  if (scan.function)
    return std::string("oracle requires a function-free formulation (found " +
                       scan.function->name + "/" +
                       std::to_string(scan.function->args.size()) + ")");

  std::vector<std::string> constants(scan.constants.begin(),
                                     scan.constants.end());
  bool model_with_goal = false;
  bool model_without_goal = false;

  for (std::size_t n = 1; n <= max_domain; ++n) {
    // Every assignment of constants to domain elements, odometer order.
    std::vector<std::size_t> odo(constants.size(), 0);
    while (true) {
      std::map<std::string, std::size_t> cmap;
      for (std::size_t i = 0; i < constants.size(); ++i)
        cmap[constants[i]] = odo[i];

      Grounder grounder;
      grounder.domain = n;
      grounder.constants = &cmap;
      std::vector<Ground> premises;
      std::map<std::string, std::size_t> env;
      for (const auto& g : formulas)
        premises.push_back(grounder.ground(*g, env, false));
      Ground goal_pos = grounder.ground(*goal, env, false);
      Ground goal_neg = grounder.ground(*goal, env, true);

      std::vector<const Ground*> conj;
      for (const auto& p : premises) conj.push_back(&p);
      conj.push_back(&goal_pos);
      std::vector<std::int8_t> assign(grounder.atom_ids.size(), -1);
      if (!model_with_goal && satisfiable(conj, assign))
        model_with_goal = true;
      conj.back() = &goal_neg;
      if (!model_without_goal && satisfiable(conj, assign))
        model_without_goal = true;
      if (model_with_goal && model_without_goal)
        return EnumOutcome::Contingent;

      // Advance the odometer.
      std::size_t i = 0;
      for (; i < odo.size(); ++i) {
        if (++odo[i] < n) break;
        odo[i] = 0;
      }
      if (i == odo.size()) break;  // wrapped (or no constants at all)
    }
  }

  if (model_with_goal) return EnumOutcome::Entailed;
  if (model_without_goal) return EnumOutcome::Contradicted;
  return EnumOutcome::Inconclusive;
}

}  // namespace resolute::prover
