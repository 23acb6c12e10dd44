// SPDX-License-Identifier: Apache-2.0
#include "resolute/fol/printer.hpp"

#include <sstream>

#include "resolute/fol/parser.hpp"

namespace resolute::fol {

namespace {

// Binding strength; parenthesize a child whenever its level is below the
// level its context demands.
int level(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    default:
      return 5;  // atoms, negation, quantifiers
  }
}

void render(const Formula& f, int min_level, std::string& out) {
  bool parens = level(f.kind) < min_level;
  if (parens) out += '(';
  switch (f.kind) {
    case Formula::Kind::Predicate: {
      out += f.name;
      if (!f.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ',';
          out += render_term(f.args[i]);
        }
        out += ')';
      }
      break;
    }
    case Formula::Kind::Not:
      out += "\xC2\xAC";
      render(*f.lhs, 5, out);
      break;
    case Formula::Kind::And:
      render(*f.lhs, 4, out);
      out += " \xE2\x88\xA7 ";
      render(*f.rhs, 5, out);
      break;
    case Formula::Kind::Or:
      render(*f.lhs, 3, out);
      out += " \xE2\x88\xA8 ";
      render(*f.rhs, 4, out);
      break;
    case Formula::Kind::Implies:
      render(*f.lhs, 3, out);
      out += " \xE2\x86\x92 ";
      render(*f.rhs, 2, out);
      break;
    case Formula::Kind::Iff:
      render(*f.lhs, 2, out);
      out += " \xE2\x86\x94 ";
      render(*f.rhs, 1, out);
      break;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out += f.kind == Formula::Kind::ForAll ? "\xE2\x88\x80" : "\xE2\x88\x83";
      out += f.name;
      out += ' ';
      render(*f.lhs, 5, out);
      break;
  }
  if (parens) out += ')';
}

void render_tree(const Formula& f, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  switch (f.kind) {
    case Formula::Kind::Predicate: {
      out += "Predicate ";
      out += f.name;
      if (!f.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ',';
          out += render_term(f.args[i]);
        }
        out += ')';
      }
      out += '\n';
      return;
    }
    case Formula::Kind::Not:
      out += "Not\n";
      render_tree(*f.lhs, indent + 1, out);
      return;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out += f.kind == Formula::Kind::ForAll ? "ForAll " : "Exists ";
      out += f.name;
      out += '\n';
      render_tree(*f.lhs, indent + 1, out);
      return;
    case Formula::Kind::And:
      out += "And\n";
      break;
    case Formula::Kind::Or:
      out += "Or\n";
      break;
    case Formula::Kind::Implies:
      out += "Implies\n";
      break;
    case Formula::Kind::Iff:
      out += "Iff\n";
      break;
  }
  render_tree(*f.lhs, indent + 1, out);
  render_tree(*f.rhs, indent + 1, out);
}

}  // namespace

std::string render_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return t.name;
    case Term::Kind::Constant:
      if (is_constant_name(t.name)) return t.name;
      return "'" + t.name + "'";
    case Term::Kind::Function: {
      std::string out = t.name;
      out += '(';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ',';
        out += render_term(t.args[i]);
      }
      out += ')';
      return out;
    }
  }
  return {};
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

std::string render_ast(const Formula& f) {
  std::string out;
  render_tree(f, 0, out);
  return out;
}

}  // namespace resolute::fol
