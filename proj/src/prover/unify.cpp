// SPDX-License-Identifier: Apache-2.0
#include "resolute/prover/unify.hpp"

#include "resolute/fol/printer.hpp"

namespace resolute::prover {

fol::Term apply_subst(const fol::Term& t, const Subst& s) {
  if (t.kind == fol::Term::Kind::Variable) {
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
  }
  fol::Term out = t;
  for (auto& a : out.args) a = apply_subst(a, s);
  return out;
}

Literal apply_subst(const Literal& l, const Subst& s) {
  Literal out = l;
  for (auto& a : out.args) a = apply_subst(a, s);
  return out;
}

Clause apply_subst(const Clause& c, const Subst& s) {
  Clause out = c;
  for (auto& l : out.literals) l = apply_subst(l, s);
  return out;
}

bool occurs(const std::string& var, const fol::Term& t) {
  if (t.kind == fol::Term::Kind::Variable) return t.name == var;
  for (const auto& a : t.args)
    if (occurs(var, a)) return true;
  return false;
}

namespace {

// Folds the new pair into every existing right-hand side before recording
// it, which keeps the substitution idempotent at every step.
void bind(const std::string& var, const fol::Term& value, Subst& s) {
  Subst one{{var, value}};
  for (auto& [v, t] : s) t = apply_subst(t, one);
  s.emplace(var, value);
}

bool unify_into(const fol::Term& a0, const fol::Term& b0, Subst& s) {
  fol::Term a = apply_subst(a0, s);
  fol::Term b = apply_subst(b0, s);
  if (a.kind == fol::Term::Kind::Variable) {
    if (b.kind == fol::Term::Kind::Variable && b.name == a.name) return true;
    if (occurs(a.name, b)) return false;
    bind(a.name, b, s);
    return true;
  }
  if (b.kind == fol::Term::Kind::Variable) {
    if (occurs(b.name, a)) return false;
    bind(b.name, a, s);
    return true;
  }
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!unify_into(a.args[i], b.args[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Subst> unify(const fol::Term& a, const fol::Term& b) {
  Subst s;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Subst> unify_args(const std::vector<fol::Term>& a,
                                const std::vector<fol::Term>& b) {
  if (a.size() != b.size()) return std::nullopt;
  Subst s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!unify_into(a[i], b[i], s)) return std::nullopt;
  return s;
}

std::string render_subst(const Subst& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += v + " -> " + fol::render_term(t);
  }
  return out + "}";
}

}  // namespace resolute::prover
