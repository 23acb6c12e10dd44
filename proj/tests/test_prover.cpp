// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "resolute/fol/parser.hpp"
#include "resolute/fol/printer.hpp"
#include "resolute/prover/clausify.hpp"
#include "resolute/prover/prove.hpp"
#include "resolute/prover/saturate.hpp"
#include "resolute/prover/unify.hpp"
#include "support/formulation_gen.hpp"
#include "support/generators.hpp"

using namespace resolute;
using namespace resolute::prover;
using fol::Term;

namespace {

fol::FormulaPtr wf(const std::string& text) {
  auto r = fol::parse_formula(text);
  REQUIRE(r.has_value());
  return r.value();
}

Literal lit(bool pos, std::string pred, std::vector<Term> args) {
  return Literal{pos, std::move(pred), std::move(args)};
}

fol::Formulation make_formulation(const std::vector<std::string>& premises,
                                  const std::string& goal) {
  fol::Formulation f;
  f.declarations = {{"P", 1, ""}, {"Q", 1, ""}, {"R", 1, ""}};
  for (const auto& p : premises) f.premises.push_back({wf(p), "", 0});
  f.goal = wf(goal);
  return f;
}

}  // namespace

TEST_CASE("canonicalize sorts, renames, and dedupes") {
  Clause c{{lit(true, "Q", {Term::var("z")}), lit(false, "P", {Term::var("z")}),
            lit(true, "Q", {Term::var("z")})}};
  Clause canon = canonicalize(c);
  CHECK(render_clause(canon) == "¬P(x0) ∨ Q(x0)");

  // Alpha-variants normalize to one spelling.
  Clause variant{{lit(false, "P", {Term::var("w")}),
                  lit(true, "Q", {Term::var("w")})}};
  CHECK(canonicalize(variant) == canon);

  CHECK(render_clause(Clause{}) == "⊥");
}

TEST_CASE("clause_weight counts predicate and term symbols") {
  // P('a') = predicate + constant.
  CHECK(clause_weight(Clause{{lit(true, "P", {Term::constant("a")})}}) == 2);
  // ¬P(x) ∨ Q(f(x)): 1+1 + 1+2 = 5.
  CHECK(clause_weight(Clause{{lit(false, "P", {Term::var("x")}),
                              lit(true, "Q",
                                  {Term::func("f", {Term::var("x")})})}}) ==
        5);
}

TEST_CASE("is_tautology spots complementary literal pairs") {
  CHECK(is_tautology(Clause{{lit(true, "P", {Term::var("x")}),
                             lit(false, "P", {Term::var("x")})}}));
  CHECK_FALSE(is_tautology(Clause{{lit(true, "P", {Term::var("x")}),
                                   lit(false, "P", {Term::var("y")})}}));
}

TEST_CASE("subsumes finds an instance mapping") {
  Clause general{{lit(true, "P", {Term::var("x")})}};
  Clause specific{{lit(true, "P", {Term::constant("a")}),
                   lit(true, "Q", {Term::constant("b")})}};
  CHECK(subsumes(general, specific));
  CHECK_FALSE(subsumes(specific, general));

  // One variable must map consistently.
  Clause linked{{lit(true, "P", {Term::var("x")}),
                 lit(true, "Q", {Term::var("x")})}};
  Clause same{{lit(true, "P", {Term::constant("a")}),
               lit(true, "Q", {Term::constant("a")})}};
  Clause split{{lit(true, "P", {Term::constant("a")}),
                lit(true, "Q", {Term::constant("b")})}};
  CHECK(subsumes(linked, same));
  CHECK_FALSE(subsumes(linked, split));
}

TEST_CASE("unify computes idempotent most general unifiers") {
  Term a = Term::constant("a");
  Term b = Term::constant("b");
  auto s = unify_args({Term::var("x"), b}, {a, Term::var("y")});
  REQUIRE(s.has_value());
  CHECK(*s == Subst{{"x", a}, {"y", b}});
  CHECK(render_subst(*s) == "{x -> 'a', y -> 'b'}");

  CHECK_FALSE(
      unify(Term::var("x"), Term::func("f", {Term::var("x")})).has_value());
  CHECK_FALSE(unify(Term::func("f", {Term::var("x")}),
                    Term::func("g", {Term::var("y")}))
                  .has_value());

  // Chained bindings stay idempotent: x against f(y), then y against a.
  auto chain = unify_args({Term::var("x"), Term::var("y")},
                          {Term::func("f", {Term::var("y")}), a});
  REQUIRE(chain.has_value());
  CHECK(chain->at("x") == Term::func("f", {a}));
  for (const auto& [v, t] : *chain)
    CHECK(apply_subst(t, *chain) == t);
}

namespace {

Term apply_closure(const Term& t, const Subst& s);

// Second opinion for the unifier property test: gather disagreement pairs
// with a worklist and no eager composition, then close the substitution by
// iterating application to a fixpoint.
std::optional<Subst> naive_unify(const Term& a, const Term& b) {
  std::vector<std::pair<Term, Term>> work{{a, b}};
  Subst s;
  while (!work.empty()) {
    auto [t1, t2] = work.back();
    work.pop_back();
    t1 = apply_subst(t1, s);
    t2 = apply_subst(t2, s);
    while (t1.is_var() && s.count(t1.name)) t1 = apply_subst(t1, s);
    while (t2.is_var() && s.count(t2.name)) t2 = apply_subst(t2, s);
    if (t1 == t2) continue;
    if (t1.is_var()) {
      if (occurs(t1.name, apply_closure(t2, s))) return std::nullopt;
      s[t1.name] = t2;
      continue;
    }
    if (t2.is_var()) {
      if (occurs(t2.name, apply_closure(t1, s))) return std::nullopt;
      s[t2.name] = t1;
      continue;
    }
    if (t1.kind != t2.kind || t1.name != t2.name ||
        t1.args.size() != t2.args.size())
      return std::nullopt;
    for (std::size_t i = 0; i < t1.args.size(); ++i)
      work.push_back({t1.args[i], t2.args[i]});
  }
  // Close to a fixpoint so the result is idempotent (terminates because
  // the occurs check kept the binding graph acyclic).
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, t] : s) {
      Term next = apply_subst(t, s);
      if (next != t) {
        t = next;
        changed = true;
      }
    }
  }
  return s;
}

// naive_unify helper: apply until fixpoint (bindings may be unclosed).
Term apply_closure(const Term& t, const Subst& s) {
  Term cur = t;
  while (true) {
    Term next = apply_subst(cur, s);
    if (next == cur) return cur;
    cur = next;
  }
}

// One-way matching: can `pattern` be instantiated to `target`?
bool instance_of(const Term& target, const Term& pattern,
                 std::map<std::string, Term>& binding) {
  if (pattern.is_var()) {
    auto it = binding.find(pattern.name);
    if (it != binding.end()) return it->second == target;
    binding.emplace(pattern.name, target);
    return true;
  }
  if (pattern.kind != target.kind || pattern.name != target.name ||
      pattern.args.size() != target.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!instance_of(target.args[i], pattern.args[i], binding)) return false;
  return true;
}

bool variants(const Term& a, const Term& b) {
  std::map<std::string, Term> m1, m2;
  return instance_of(a, b, m1) && instance_of(b, a, m2);
}

}  // namespace

TEST_CASE("unify agrees with a naive unifier on random term pairs") {
  testgen::Rng rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    Term t1 = testgen::random_term(rng, 3, {});
    Term t2 = testgen::random_term(rng, 3, {});
    auto fast = unify(t1, t2);
    auto slow = naive_unify(t1, t2);
    REQUIRE(fast.has_value() == slow.has_value());
    if (!fast) continue;
    Term r1 = apply_subst(t1, *fast);
    // Both sides really unify.
    CHECK(r1 == apply_subst(t2, *fast));
    CHECK(apply_subst(t1, *slow) == apply_subst(t2, *slow));
    // Idempotent.
    CHECK(apply_subst(r1, *fast) == r1);
    // Equally general: the two unified terms are variants.
    CHECK(variants(r1, apply_subst(t1, *slow)));
  }
}

TEST_CASE("clausify handles implication, Skolem constants and functions") {
  auto clauses = clausify({wf("∀x (P(x) → Q(x))"), wf("P('a')")},
                          mk_not(wf("Q('a')")));
  REQUIRE(clauses.size() == 3);
  CHECK(render_clause(clauses[0]) == "¬P(x0) ∨ Q(x0)");
  CHECK(render_clause(clauses[1]) == "P('a')");
  CHECK(render_clause(clauses[2]) == "¬Q('a')");

  auto skc = clausify({wf("∃x P(x)")}, nullptr);
  REQUIRE(skc.size() == 1);
  CHECK(render_clause(skc[0]) == "P(sk0)");

  auto skf = clausify({wf("∀x ∃y Loves(x,y)")}, nullptr);
  REQUIRE(skf.size() == 1);
  CHECK(render_clause(skf[0]) == "Loves(x0,sk0(x0))");
}

TEST_CASE("clausify numbers Skolem symbols across one call") {
  auto clauses = clausify({wf("∃x P(x)"), wf("∃x Q(x)")}, nullptr);
  REQUIRE(clauses.size() == 2);
  CHECK(render_clause(clauses[0]) == "P(sk0)");
  CHECK(render_clause(clauses[1]) == "Q(sk1)");
}

TEST_CASE("clausify distributes disjunction over conjunction") {
  auto clauses = clausify({wf("P('a') ∨ (Q('a') ∧ R('a'))")}, nullptr);
  REQUIRE(clauses.size() == 2);
  CHECK(render_clause(clauses[0]) == "P('a') ∨ Q('a')");
  CHECK(render_clause(clauses[1]) == "P('a') ∨ R('a')");
}

TEST_CASE("clausify drops tautologies") {
  auto clauses = clausify({wf("P('a') ∨ ¬P('a')")}, nullptr);
  CHECK(clauses.empty());
}

TEST_CASE("saturate refutes the modus ponens triangle in two steps") {
  auto clauses = clausify({wf("∀x (P(x) → Q(x))"), wf("P('a')")},
                          mk_not(wf("Q('a')")));
  auto result = saturate(clauses, ResourceLimits{});
  CHECK(result.status == SatStatus::Refuted);
  std::size_t derivations = 0;
  for (const auto& st : result.trace)
    if (st.kind != TraceStep::Kind::Input) derivations++;
  CHECK(derivations <= 2);
  CHECK(verify_trace(result.trace));
  CHECK(render_trace(result.trace) ==
        "0: ¬P(x0) ∨ Q(x0) <- input\n"
        "1: P('a') <- input\n"
        "2: ¬Q('a') <- input\n"
        "3: Q('a') <- resolve(1@0, 0@0, {y0 -> 'a'})\n"
        "5: ⊥ <- resolve(2@0, 3@0, {})\n");
}

TEST_CASE("saturate reports saturation when nothing resolves") {
  auto result = saturate({Clause{{lit(true, "P", {Term::constant("a")})}},
                          Clause{{lit(true, "Q", {Term::constant("b")})}}},
                         ResourceLimits{});
  CHECK(result.status == SatStatus::Saturated);
  CHECK(result.trace.empty());
  CHECK(result.stats.generated == 0);
}

TEST_CASE("saturate trips the clause limit on a growing chain") {
  // P(x) ∨ ¬P(f(x)) self-resolves into ever deeper instances.
  std::vector<Clause> chain{
      Clause{{lit(true, "P", {Term::var("x")}),
              lit(false, "P", {Term::func("f", {Term::var("x")})})}},
      Clause{{lit(true, "P", {Term::constant("a")})}}};
  ResourceLimits limits;
  limits.max_clauses = 50;
  // Keep the weight cap out of the way so the clause budget is what trips.
  limits.max_clause_weight = 1000000;
  auto first = saturate(chain, limits);
  CHECK(first.status == SatStatus::ResourceOut);
  CHECK(first.stats.kept > 50);

  // Deterministic replay: identical run, identical footprint.
  auto second = saturate(chain, limits);
  CHECK(second.status == first.status);
  CHECK(second.stats == first.stats);
}

TEST_CASE("saturate subsumes a heavier instance at selection") {
  auto result = saturate({Clause{{lit(true, "P", {Term::var("x")})}},
                          Clause{{lit(true, "P", {Term::constant("a")}),
                                  lit(true, "Q", {Term::constant("b")})}}},
                         ResourceLimits{});
  CHECK(result.status == SatStatus::Saturated);
  CHECK(result.stats.subsumed == 1);
}

TEST_CASE("saturate refutes an input empty clause immediately") {
  auto result = saturate({Clause{}}, ResourceLimits{});
  CHECK(result.status == SatStatus::Refuted);
  REQUIRE(result.trace.size() == 1);
  CHECK(result.trace[0].kind == TraceStep::Kind::Input);
  CHECK(verify_trace(result.trace));
}

TEST_CASE("factoring closes the two-suitor puzzle") {
  // {P(x) ∨ P(y)} with {¬P(z)} needs a factor before resolution can
  // reach the empty clause; saturate must find it.
  std::vector<Clause> input{
      Clause{{lit(true, "P", {Term::var("x")}),
              lit(true, "P", {Term::var("y")})}},
      Clause{{lit(false, "P", {Term::var("z")})}}};
  auto result = saturate(input, ResourceLimits{});
  CHECK(result.status == SatStatus::Refuted);
  CHECK(verify_trace(result.trace));
}

TEST_CASE("prove decides the textbook trio") {
  ResourceLimits limits;
  auto proved = prove(
      make_formulation({"∀x (P(x) → Q(x))", "P('a')"}, "Q('a')"), limits);
  CHECK(proved.outcome == Outcome::Proved);
  CHECK(verify_trace(proved.trace));
  CHECK(proved.stats.refutation_run == SatStatus::Refuted);
  CHECK_FALSE(proved.stats.disproof_run.has_value());

  auto disproved = prove(
      make_formulation({"∀x (P(x) → Q(x))", "P('a')"}, "¬Q('a')"), limits);
  CHECK(disproved.outcome == Outcome::Disproved);
  CHECK(verify_trace(disproved.trace));
  CHECK(disproved.stats.refutation_run == SatStatus::Saturated);
  CHECK(disproved.stats.disproof_run == SatStatus::Refuted);

  auto unknown = prove(
      make_formulation({"∀x (P(x) → Q(x))", "P('a')"}, "R('a')"), limits);
  CHECK(unknown.outcome == Outcome::Unknown);
  CHECK(unknown.trace.empty());
  CHECK(unknown.stats.refutation_run == SatStatus::Saturated);
  CHECK(unknown.stats.disproof_run == SatStatus::Saturated);
}

TEST_CASE("outcome names round-trip") {
  for (Outcome o : {Outcome::Proved, Outcome::Disproved, Outcome::Unknown,
                    Outcome::ExecutionError})
    CHECK(outcome_from_name(outcome_name(o)) == o);
  CHECK_FALSE(outcome_from_name("MAYBE").has_value());
}

TEST_CASE("prove is deterministic across repeated runs") {
  testgen::Rng rng(77001);
  testgen::FormulationFamily family(rng);
  ResourceLimits limits;
  limits.max_clauses = 5000;
  for (int i = 0; i < 50; ++i) {
    auto f = family.sample();
    auto a = prove(f, limits);
    auto b = prove(f, limits);
    CHECK(a.outcome == b.outcome);
    CHECK(a.stats == b.stats);
    CHECK(a.trace == b.trace);
    if (a.outcome == Outcome::Proved || a.outcome == Outcome::Disproved)
      CHECK(verify_trace(a.trace));
  }
}
