// SPDX-License-Identifier: Apache-2.0
#include <set>
#include <string>

#include "doctest.h"
#include "resolute/fol/ast.hpp"
#include "resolute/fol/parser.hpp"
#include "resolute/fol/printer.hpp"
#include "resolute/fol/program.hpp"
#include "support/generators.hpp"

using namespace resolute;
using namespace resolute::fol;

namespace {

FormulaPtr wf(const std::string& text) {
  auto r = parse_formula(text);
  REQUIRE_MESSAGE(r.has_value(), text);
  return r.value();
}

}  // namespace

TEST_CASE("parse_formula handles the quantified implication") {
  auto f = wf("∀x (Young(x) → ¬Teaches(x))");
  auto expected = mk_forall(
      "x", mk_implies(mk_pred("Young", {Term::var("x")}),
                      mk_not(mk_pred("Teaches", {Term::var("x")}))));
  CHECK(equal(*f, *expected));
}

TEST_CASE("parse_formula honors precedence with ASCII spellings") {
  auto f = wf("P(a) & Q(a) -> R(a)");
  auto expected =
      mk_implies(mk_and(mk_pred("P", {Term::var("a")}),
                        mk_pred("Q", {Term::var("a")})),
                 mk_pred("R", {Term::var("a")}));
  CHECK(equal(*f, *expected));

  // → is right-associative; ¬ binds tighter than ∧ which binds tighter
  // than ∨.
  CHECK(equal(*wf("P(a) -> Q(a) -> R(a)"),
              *wf("P(a) -> (Q(a) -> R(a))")));
  CHECK(equal(*wf("-P(a) & Q(a) | R(a)"),
              *wf("((¬P(a)) ∧ Q(a)) ∨ R(a)")));
}

TEST_CASE("parse_formula reports truncation at end of input") {
  auto r = parse_formula("∀x (P(x) →");
  REQUIRE(!r.has_value());
  CHECK(r.error().message == "expected formula");
  CHECK(r.error().token == "end of input");
  CHECK(r.error().offset == std::string("∀x (P(x) →").size());
}

TEST_CASE("parse_formula diagnostics point inside the offending token") {
  std::string text = "P(a) @ Q(b)";
  auto r = parse_formula(text);
  REQUIRE(!r.has_value());
  CHECK(r.error().offset == text.find('@'));
  CHECK(r.error().line == 1);
  CHECK(r.error().column == static_cast<int>(text.find('@')) + 1);
}

TEST_CASE("parse_formula rejects equality with a dedicated message") {
  auto r = parse_formula("P(a) = Q(a)");
  REQUIRE(!r.has_value());
  CHECK(r.error().message == "equality is not supported");
}

TEST_CASE("parse_formula enforces a nesting depth cap") {
  std::string text;
  for (int i = 0; i < 5000; ++i) text += "¬";
  text += "P(a)";
  auto r = parse_formula(text);
  REQUIRE(!r.has_value());
  CHECK(r.error().message == "formula nested too deeply");
}

TEST_CASE("quoted constants round-trip") {
  auto f = wf("Student('Rose')");
  REQUIRE(f->args.size() == 1);
  CHECK(f->args[0] == Term::constant("Rose"));
  CHECK(render_formula(*f) == "Student('Rose')");
}

TEST_CASE("bare capitalized names in term position are diagnosed") {
  auto r = parse_formula("Student(Rose)");
  REQUIRE(!r.has_value());
  CHECK(r.error().token == "Rose");
}

TEST_CASE("render_formula produces canonical minimal-paren text") {
  auto f = mk_forall(
      "x", mk_implies(mk_pred("Young", {Term::var("x")}),
                      mk_not(mk_pred("Teaches", {Term::var("x")}))));
  CHECK(render_formula(*f) == "∀x (Young(x) → ¬Teaches(x))");

  // Lexically `a` is a variable name, so a bare `a` in rendered output
  // round-trips only as a variable.
  auto a = Term::var("a");
  CHECK(render_formula(*mk_not(mk_not(mk_pred("P", {a})))) == "¬¬P(a)");
  CHECK(render_formula(*mk_and(mk_pred("P", {a}),
                               mk_or(mk_pred("Q", {a}), mk_pred("R", {a})))) ==
        "P(a) ∧ (Q(a) ∨ R(a))");
}

TEST_CASE("free_variables") {
  CHECK(free_variables(*wf("P(x)")) == std::set<std::string>{"x"});
  CHECK(free_variables(*wf("∀x P(x)")).empty());
  CHECK(free_variables(*wf("∀x R(x,y)")) == std::set<std::string>{"y"});
}

TEST_CASE("alpha_equal identifies bound renamings only") {
  CHECK(alpha_equal(*wf("∀x P(x)"), *wf("∀y P(y)")));
  CHECK(!alpha_equal(*wf("P(x)"), *wf("P(y)")));  // free names matter
  CHECK(alpha_equal(*wf("∀x (P(x) → ∃x Q(x))"),
                    *wf("∀y (P(y) → ∃z Q(z))")));
  CHECK(!alpha_equal(*wf("∀x P(x)"), *wf("∃x P(x)")));
}

TEST_CASE("universal_closure binds free variables sorted by name") {
  auto f = wf("R(y,x)");
  CHECK(render_formula(*universal_closure(f)) == "∀x ∀y R(y,x)");
}

static const char* kProgram =
    "Predicates:\n"
    "Young/1 ::: x is young\n"
    "Teaches/1 ::: x teaches\n"
    "Student/1 ::: x is a student\n"
    "Premises:\n"
    "∀x (Young(x) → ¬Teaches(x)) ::: No young person teaches.\n"
    "∀x (Student(x) → Young(x)) ::: Every student is young.\n"
    "Student(rose) ::: Rose is a student.\n"
    "Conclusion:\n"
    "¬Teaches(rose)\n";

TEST_CASE("parse_program parses a well-formed three-section block") {
  auto r = parse_program(kProgram);
  REQUIRE(r.has_value());
  const Formulation& f = r.value();
  CHECK(f.declarations.size() == 3);
  CHECK(f.declarations[0].name == "Young");
  CHECK(f.declarations[0].arity == 1);
  CHECK(f.declarations[0].gloss == "x is young");
  CHECK(f.premises.size() == 3);
  CHECK(f.premises[0].source == "No young person teaches.");
  REQUIRE(f.goal != nullptr);
  CHECK(render_formula(*f.goal) == "¬Teaches(rose)");
  CHECK(f.raw_text == kProgram);
}

TEST_CASE("parse_program extracts the first fenced block with all sections") {
  std::string text = std::string("Here is the formulation you asked for:\n\n") +
                     "```\n" + kProgram + "```\n\nHope this helps!\n";
  auto r = parse_program(text);
  REQUIRE(r.has_value());
  CHECK(r.value().premises.size() == 3);
  // Offsets stay valid inside the full raw text.
  CHECK(r.value().raw_text == text);
}

TEST_CASE("parse_program tolerates surrounding prose without fences") {
  std::string text = std::string("Sure! The program follows.\n\n") + kProgram +
                     "\nLet me know if anything is unclear.\n";
  auto r = parse_program(text);
  REQUIRE(r.has_value());
  CHECK(r.value().premises.size() == 3);
}

TEST_CASE("parse_program reports undeclared predicates") {
  std::string text =
      "Predicates:\n"
      "Young/1\n"
      "Premises:\n"
      "Human(socrates)\n"
      "Conclusion:\n"
      "Young(socrates)\n";
  auto r = parse_program(text);
  REQUIRE(!r.has_value());
  REQUIRE(r.error().size() == 1);
  CHECK(r.error()[0].message == "undeclared predicate Human/1");
  CHECK(r.error()[0].offset == text.find("Human"));
}

TEST_CASE("parse_program reports arity mismatches") {
  std::string text =
      "Predicates:\n"
      "Teaches/1\n"
      "Premises:\n"
      "Teaches(x, y)\n"
      "Conclusion:\n"
      "Teaches(rose)\n";
  auto r = parse_program(text);
  REQUIRE(!r.has_value());
  REQUIRE(r.error().size() == 1);
  CHECK(r.error()[0].message ==
        "arity mismatch: Teaches used with arity 2, declared Teaches/1");
}

TEST_CASE("parse_program collects every diagnostic, not just the first") {
  std::string text =
      "Predicates:\n"
      "Young/1\n"
      "bad decl line\n"
      "Premises:\n"
      "Young(\n"
      "Human(a)\n"
      "Conclusion:\n"
      "Young(rose\n";
  auto r = parse_program(text);
  REQUIRE(!r.has_value());
  CHECK(r.error().size() == 4);  // bad decl, bad premise, undeclared, bad goal
}

TEST_CASE("parse_program flags a missing section") {
  std::string text =
      "Predicates:\n"
      "Young/1\n"
      "Conclusion:\n"
      "Young(rose)\n";
  auto r = parse_program(text);
  REQUIRE(!r.has_value());
  REQUIRE(r.error().size() == 1);
  CHECK(r.error()[0].message == "missing Premises: section");
}

TEST_CASE("parse_program reports when no block is present") {
  auto r = parse_program("I could not produce a formulation, sorry.");
  REQUIRE(!r.has_value());
  REQUIRE(r.error().size() == 1);
  CHECK(r.error()[0].message == "no formulation block found");
}

TEST_CASE("parse_program rejects an open conclusion with a free variable") {
  std::string text =
      "Predicates:\n"
      "P/1\n"
      "Premises:\n"
      "P(a)\n"
      "Conclusion:\n"
      "P(x)\n";
  auto r = parse_program(text);
  REQUIRE(!r.has_value());
  REQUIRE(r.error().size() == 1);
  CHECK(r.error()[0].message == "free variable 'x' in conclusion");
}

TEST_CASE("free premise variables are fine; they close universally") {
  std::string text =
      "Predicates:\n"
      "P/1\nQ/1\n"
      "Premises:\n"
      "P(x) -> Q(x)\n"
      "Conclusion:\n"
      "Q(rose) | ¬Q(rose)\n";
  CHECK(parse_program(text).has_value());
}

TEST_CASE("render_program round-trips a formulation") {
  auto r = parse_program(kProgram);
  REQUIRE(r.has_value());
  std::string rendered = render_program(r.value());
  auto r2 = parse_program(rendered);
  REQUIRE(r2.has_value());
  CHECK(r2.value().premises.size() == r.value().premises.size());
  for (std::size_t i = 0; i < r2.value().premises.size(); ++i)
    CHECK(alpha_equal(*r2.value().premises[i].formula,
                      *r.value().premises[i].formula));
  CHECK(alpha_equal(*r2.value().goal, *r.value().goal));
}

TEST_CASE("property: render/parse round-trip is alpha-stable") {
  testgen::Rng rng(20240817u);
  for (int i = 0; i < 1000; ++i) {
    auto f = testgen::random_formula(rng, 4, {});
    std::string text = render_formula(*f);
    auto back = parse_formula(text);
    REQUIRE_MESSAGE(back.has_value(), text);
    CHECK_MESSAGE(alpha_equal(*f, *back.value()), text);
  }
}

TEST_CASE("property: parser is total on arbitrary bytes") {
  testgen::Rng rng(911u);
  for (int i = 0; i < 2000; ++i) {
    std::string junk = testgen::random_bytes(rng, 160);
    auto r = parse_formula(junk);  // must not crash or hang
    if (r.has_value()) CHECK(r.value() != nullptr);
  }
}
