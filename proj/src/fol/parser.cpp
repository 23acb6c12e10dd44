// SPDX-License-Identifier: Apache-2.0
#include "resolute/fol/parser.hpp"

#include <cctype>
#include <optional>

namespace resolute::fol {

namespace {

constexpr int kMaxDepth = 200;

enum class Tok {
  LParen,
  RParen,
  Comma,
  Not,
  And,
  Or,
  Implies,
  Iff,
  ForAll,
  Exists,
  Upper,   // predicate-style identifier
  Lower,   // variable / constant / function identifier
  Quoted,  // quoted constant
  Equals,
  End,
  Bad,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string text;  // identifier or quoted payload
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) {
      t.kind = Tok::End;
      return t;
    }
    if (match("\xE2\x88\x80")) return tok(t, Tok::ForAll, "∀");
    if (match("\xE2\x88\x83")) return tok(t, Tok::Exists, "∃");
    if (match("\xC2\xAC")) return tok(t, Tok::Not, "¬");
    if (match("\xE2\x88\xA7")) return tok(t, Tok::And, "∧");
    if (match("\xE2\x88\xA8")) return tok(t, Tok::Or, "∨");
    if (match("\xE2\x86\x92")) return tok(t, Tok::Implies, "→");
    if (match("\xE2\x86\x94")) return tok(t, Tok::Iff, "↔");
    if (match("<->")) return tok(t, Tok::Iff, "<->");
    if (match("->")) return tok(t, Tok::Implies, "->");
    char c = text_[pos_];
    switch (c) {
      case '(':
        ++pos_;
        return tok(t, Tok::LParen, "(");
      case ')':
        ++pos_;
        return tok(t, Tok::RParen, ")");
      case ',':
        ++pos_;
        return tok(t, Tok::Comma, ",");
      case '-':
      case '~':
        ++pos_;
        return tok(t, Tok::Not, std::string(1, c));
      case '&':
        ++pos_;
        return tok(t, Tok::And, "&");
      case '|':
        ++pos_;
        return tok(t, Tok::Or, "|");
      case '=':
        ++pos_;
        return tok(t, Tok::Equals, "=");
      case '\'':
      case '"':
        return quoted(t, c);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "all") return tok(t, Tok::ForAll, std::move(word));
      if (word == "exists") return tok(t, Tok::Exists, std::move(word));
      bool upper = std::isupper(static_cast<unsigned char>(word[0]));
      return tok(t, upper ? Tok::Upper : Tok::Lower, std::move(word));
    }
    // Grab one (possibly multibyte) unit so the diagnostic shows it.
    std::size_t len = 1;
    while (pos_ + len < text_.size() &&
           (static_cast<unsigned char>(text_[pos_ + len]) & 0xC0) == 0x80)
      ++len;
    t.text = std::string(text_.substr(pos_, len));
    pos_ += len;
    t.kind = Tok::Bad;
    return t;
  }

 private:
  Token& tok(Token& t, Tok k, std::string text) {
    t.kind = k;
    t.text = std::move(text);
    return t;
  }

  Token quoted(Token& t, char delim) {
    std::size_t start = pos_++;
    std::string payload;
    while (pos_ < text_.size() && text_[pos_] != delim && text_[pos_] != '\n')
      payload += text_[pos_++];
    if (pos_ >= text_.size() || text_[pos_] != delim) {
      t.kind = Tok::Bad;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    ++pos_;
    t.kind = Tok::Quoted;
    t.text = std::move(payload);
    return t;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;

  bool match(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), lex_(text) {
    advance();
  }

  Result<FormulaPtr, ParseDiagnostic> formula() {
    auto f = parse_iff(0);
    if (!f) return f;
    if (cur_.kind != Tok::End)
      return fail("unexpected trailing input");
    return f;
  }

  Result<Term, ParseDiagnostic> term_only() {
    auto t = parse_term(0);
    if (!t) return t;
    if (cur_.kind != Tok::End)
      return Result<Term, ParseDiagnostic>(diag("unexpected trailing input"));
    return t;
  }

 private:
  std::string_view text_;
  Lexer lex_;
  Token cur_;

  void advance() { cur_ = lex_.next(); }

  ParseDiagnostic diag(std::string message) const {
    ParseDiagnostic d;
    d.offset = cur_.offset;
    auto pos = locate(text_, d.offset);
    d.line = pos.line;
    d.column = pos.column;
    d.message = std::move(message);
    d.token = cur_.kind == Tok::End ? "end of input" : cur_.text;
    return d;
  }

  Result<FormulaPtr, ParseDiagnostic> fail(std::string message) const {
    return Result<FormulaPtr, ParseDiagnostic>(diag(std::move(message)));
  }

  Result<FormulaPtr, ParseDiagnostic> parse_iff(int depth) {
    auto lhs = parse_implies(depth);
    if (!lhs) return lhs;
    if (cur_.kind == Tok::Iff) {
      advance();
      auto rhs = parse_iff(depth + 1);
      if (!rhs) return rhs;
      return Result<FormulaPtr, ParseDiagnostic>(
          mk_iff(std::move(lhs.value()), std::move(rhs.value())));
    }
    return lhs;
  }

  Result<FormulaPtr, ParseDiagnostic> parse_implies(int depth) {
    auto lhs = parse_or(depth);
    if (!lhs) return lhs;
    if (cur_.kind == Tok::Implies) {
      advance();
      auto rhs = parse_implies(depth + 1);
      if (!rhs) return rhs;
      return Result<FormulaPtr, ParseDiagnostic>(
          mk_implies(std::move(lhs.value()), std::move(rhs.value())));
    }
    return lhs;
  }

  Result<FormulaPtr, ParseDiagnostic> parse_or(int depth) {
    auto lhs = parse_and(depth);
    if (!lhs) return lhs;
    while (cur_.kind == Tok::Or) {
      advance();
      auto rhs = parse_and(depth);
      if (!rhs) return rhs;
      lhs = Result<FormulaPtr, ParseDiagnostic>(
          mk_or(std::move(lhs.value()), std::move(rhs.value())));
    }
    return lhs;
  }

  Result<FormulaPtr, ParseDiagnostic> parse_and(int depth) {
    auto lhs = parse_unary(depth);
    if (!lhs) return lhs;
    while (cur_.kind == Tok::And) {
      advance();
      auto rhs = parse_unary(depth);
      if (!rhs) return rhs;
      lhs = Result<FormulaPtr, ParseDiagnostic>(
          mk_and(std::move(lhs.value()), std::move(rhs.value())));
    }
    return lhs;
  }

  Result<FormulaPtr, ParseDiagnostic> parse_unary(int depth) {
    if (depth > kMaxDepth) return fail("formula nested too deeply");
    switch (cur_.kind) {
      case Tok::Not: {
        advance();
        auto body = parse_unary(depth + 1);
        if (!body) return body;
        return Result<FormulaPtr, ParseDiagnostic>(
            mk_not(std::move(body.value())));
      }
      case Tok::ForAll:
      case Tok::Exists: {
        bool universal = cur_.kind == Tok::ForAll;
        advance();
        if (cur_.kind != Tok::Lower || !is_variable_name(cur_.text))
          return fail("expected a variable after the quantifier");
        std::string var = cur_.text;
        advance();
        auto body = parse_unary(depth + 1);
        if (!body) return body;
        return Result<FormulaPtr, ParseDiagnostic>(
            universal ? mk_forall(std::move(var), std::move(body.value()))
                      : mk_exists(std::move(var), std::move(body.value())));
      }
      case Tok::LParen: {
        advance();
        auto inner = parse_iff(depth + 1);
        if (!inner) return inner;
        if (cur_.kind != Tok::RParen) return fail("expected ')'");
        advance();
        return inner;
      }
      case Tok::Upper:
        return parse_atom(depth);
      case Tok::Equals:
        return fail("equality is not supported");
      case Tok::End:
        return fail("expected formula");
      default:
        return fail("expected formula");
    }
  }

  Result<FormulaPtr, ParseDiagnostic> parse_atom(int depth) {
    std::string name = cur_.text;
    advance();
    std::vector<Term> args;
    if (cur_.kind == Tok::LParen) {
      advance();
      while (true) {
        auto t = parse_term(depth + 1);
        if (!t) return Result<FormulaPtr, ParseDiagnostic>(t.error());
        args.push_back(std::move(t.value()));
        if (cur_.kind == Tok::Comma) {
          advance();
          continue;
        }
        break;
      }
      if (cur_.kind != Tok::RParen) return fail("expected ')'");
      advance();
    }
    if (cur_.kind == Tok::Equals) return fail("equality is not supported");
    return Result<FormulaPtr, ParseDiagnostic>(
        mk_pred(std::move(name), std::move(args)));
  }

  Result<Term, ParseDiagnostic> parse_term(int depth) {
    if (depth > kMaxDepth)
      return Result<Term, ParseDiagnostic>(diag("term nested too deeply"));
    if (cur_.kind == Tok::Quoted) {
      Term t = Term::constant(cur_.text);
      advance();
      return Result<Term, ParseDiagnostic>(std::move(t));
    }
    if (cur_.kind == Tok::Equals)
      return Result<Term, ParseDiagnostic>(diag("equality is not supported"));
    if (cur_.kind == Tok::Upper)
      return Result<Term, ParseDiagnostic>(
          diag("capitalized names are predicates; quote constants like 'Rose'"));
    if (cur_.kind != Tok::Lower)
      return Result<Term, ParseDiagnostic>(diag("expected term"));
    std::string name = cur_.text;
    advance();
    if (cur_.kind == Tok::LParen) {
      advance();
      std::vector<Term> args;
      while (true) {
        auto t = parse_term(depth + 1);
        if (!t) return t;
        args.push_back(std::move(t.value()));
        if (cur_.kind == Tok::Comma) {
          advance();
          continue;
        }
        break;
      }
      if (cur_.kind != Tok::RParen)
        return Result<Term, ParseDiagnostic>(diag("expected ')'"));
      advance();
      return Result<Term, ParseDiagnostic>(
          Term::func(std::move(name), std::move(args)));
    }
    if (is_variable_name(name))
      return Result<Term, ParseDiagnostic>(Term::var(std::move(name)));
    return Result<Term, ParseDiagnostic>(Term::constant(std::move(name)));
  }
};

}  // namespace

bool is_variable_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

bool is_constant_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    return false;
  if (is_variable_name(name)) return false;
  if (name == "all" || name == "exists") return false;
  for (char c : name)
    if (!is_ident_char(c)) return false;
  return true;
}

bool is_predicate_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name)
    if (!is_ident_char(c)) return false;
  return true;
}

Result<FormulaPtr, ParseDiagnostic> parse_formula(std::string_view text) {
  return Parser(text).formula();
}

Result<Term, ParseDiagnostic> parse_term(std::string_view text) {
  return Parser(text).term_only();
}

}  // namespace resolute::fol
