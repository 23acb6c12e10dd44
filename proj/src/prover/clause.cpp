// SPDX-License-Identifier: Apache-2.0
#include "resolute/prover/clause.hpp"

#include <algorithm>
#include <map>

#include "resolute/fol/printer.hpp"

namespace resolute::prover {

namespace {

std::size_t term_weight(const fol::Term& t) {
  std::size_t w = 1;
  for (const auto& a : t.args) w += term_weight(a);
  return w;
}

fol::Term rename_term(const fol::Term& t,
                      std::map<std::string, std::string>& names,
                      std::size_t& next) {
  if (t.kind == fol::Term::Kind::Variable) {
    auto it = names.find(t.name);
    if (it == names.end())
      it = names.emplace(t.name, "x" + std::to_string(next++)).first;
    return fol::Term::var(it->second);
  }
  fol::Term out = t;
  for (auto& a : out.args) a = rename_term(a, names, next);
  return out;
}

// Sort key that ignores variable identity so the order cannot depend on
// the incoming variable names.
std::string skeleton(const Literal& l) {
  Literal masked = l;
  // Replace every variable with the same placeholder.
  struct {
    void operator()(fol::Term& t) const {
      if (t.kind == fol::Term::Kind::Variable) t.name = "*";
      for (auto& a : t.args) (*this)(a);
    }
  } mask;
  for (auto& a : masked.args) mask(a);
  std::string s = (masked.positive ? "+" : "-") + masked.pred + "|";
  for (const auto& a : masked.args) s += fol::render_term(a) + ",";
  return s;
}

}  // namespace

std::size_t clause_weight(const Clause& c) {
  std::size_t w = 0;
  for (const auto& l : c.literals) {
    w += 1;  // the predicate symbol
    for (const auto& a : l.args) w += term_weight(a);
  }
  return w;
}

Clause canonicalize(const Clause& c) {
  Clause out = c;
  // Pass 1: order literals by a variable-insensitive key.
  std::stable_sort(out.literals.begin(), out.literals.end(),
                   [](const Literal& a, const Literal& b) {
                     return skeleton(a) < skeleton(b);
                   });
  // Pass 2: rename variables in first-occurrence order.
  std::map<std::string, std::string> names;
  std::size_t next = 0;
  for (auto& l : out.literals)
    for (auto& a : l.args) a = rename_term(a, names, next);
  // Pass 3: full sort and dedup now that spellings are canonical.
  std::sort(out.literals.begin(), out.literals.end());
  out.literals.erase(std::unique(out.literals.begin(), out.literals.end()),
                     out.literals.end());
  return out;
}

bool is_tautology(const Clause& c) {
  for (const auto& l : c.literals) {
    if (!l.positive) continue;
    for (const auto& m : c.literals)
      if (!m.positive && m.pred == l.pred && m.args == l.args) return true;
  }
  return false;
}

namespace {

// Matching for subsumption: pattern variables bind to target terms; the
// bindings form a simultaneous substitution, so target variables are inert
// and never rewritten.
bool match_term(const fol::Term& pat, const fol::Term& tgt,
                std::map<std::string, fol::Term>& binding) {
  if (pat.kind == fol::Term::Kind::Variable) {
    auto it = binding.find(pat.name);
    if (it != binding.end()) return it->second == tgt;
    binding.emplace(pat.name, tgt);
    return true;
  }
  if (pat.kind != tgt.kind || pat.name != tgt.name ||
      pat.args.size() != tgt.args.size())
    return false;
  for (std::size_t i = 0; i < pat.args.size(); ++i)
    if (!match_term(pat.args[i], tgt.args[i], binding)) return false;
  return true;
}

bool match_rest(const Clause& general, const Clause& specific, std::size_t i,
                std::map<std::string, fol::Term>& binding) {
  if (i == general.literals.size()) return true;
  const Literal& g = general.literals[i];
  for (const Literal& s : specific.literals) {
    if (g.positive != s.positive || g.pred != s.pred ||
        g.args.size() != s.args.size())
      continue;
    auto saved = binding;
    bool ok = true;
    for (std::size_t k = 0; k < g.args.size() && ok; ++k)
      ok = match_term(g.args[k], s.args[k], binding);
    if (ok && match_rest(general, specific, i + 1, binding)) return true;
    binding = std::move(saved);
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.literals.size() > specific.literals.size()) return false;
  std::map<std::string, fol::Term> binding;
  return match_rest(general, specific, 0, binding);
}

std::string render_literal(const Literal& l) {
  std::string out = l.positive ? "" : "¬";
  out += l.pred;
  if (!l.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ",";
      out += fol::render_term(l.args[i]);
    }
    out += ")";
  }
  return out;
}

std::string render_clause(const Clause& c) {
  if (c.empty()) return "⊥";
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += " ∨ ";
    out += render_literal(c.literals[i]);
  }
  return out;
}

}  // namespace resolute::prover
