// SPDX-License-Identifier: Apache-2.0
#include "resolute/fol/program.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "resolute/fol/parser.hpp"
#include "resolute/fol/printer.hpp"

namespace resolute::fol {

namespace {

struct Line {
  std::size_t offset;  // into raw text
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text, std::size_t base) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({base + start, text.substr(start, end - start)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

enum class Header { None, Predicates, Premises, Conclusion };

Header header_of(std::string_view line) {
  std::string_view t = trim(line);
  if (iequals(t, "Predicates:")) return Header::Predicates;
  if (iequals(t, "Premises:")) return Header::Premises;
  if (iequals(t, "Conclusion:")) return Header::Conclusion;
  return Header::None;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

bool is_fence(std::string_view line) {
  return trim(line).substr(0, 3) == "```";
}

// Strips a leading "- " or "* " bullet, keeping offsets honest.
std::string_view strip_bullet(std::string_view s, std::size_t& offset) {
  std::string_view t = s;
  std::size_t skipped = 0;
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) {
    t.remove_prefix(1);
    ++skipped;
  }
  if (t.size() >= 2 && (t[0] == '-' || t[0] == '*') && t[1] == ' ') {
    offset += skipped + 2;
    return t.substr(2);
  }
  return s;
}

ParseDiagnostic make_diag(std::string_view raw, std::size_t offset,
                          std::string message, std::string token = {}) {
  ParseDiagnostic d;
  d.offset = offset;
  auto pos = locate(raw, offset);
  d.line = pos.line;
  d.column = pos.column;
  d.message = std::move(message);
  d.token = std::move(token);
  return d;
}

// Re-anchors a formula diagnostic produced on a slice at `slice_offset`.
ParseDiagnostic shift_diag(std::string_view raw, ParseDiagnostic d,
                           std::size_t slice_offset) {
  d.offset += slice_offset;
  auto pos = locate(raw, d.offset);
  d.line = pos.line;
  d.column = pos.column;
  return d;
}

// Splits "payload ::: annotation" at the first ":::".
std::pair<std::string_view, std::string_view> split_annotation(
    std::string_view line) {
  std::size_t sep = line.find(":::");
  if (sep == std::string_view::npos) return {line, {}};
  return {line.substr(0, sep), trim(line.substr(sep + 3))};
}

struct Section {
  std::size_t header_offset = 0;
  std::vector<Line> lines;
  bool present = false;
};

void count_usage(const Formula& f,
                 std::map<std::pair<std::string, int>, int>& used) {
  switch (f.kind) {
    case Formula::Kind::Predicate:
      used[{f.name, static_cast<int>(f.args.size())}]++;
      return;
    case Formula::Kind::Not:
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      count_usage(*f.lhs, used);
      return;
    default:
      count_usage(*f.lhs, used);
      count_usage(*f.rhs, used);
      return;
  }
}

}  // namespace

std::vector<ParseDiagnostic> validate_formulation(const Formulation& f,
                                                  std::size_t goal_offset) {
  std::vector<ParseDiagnostic> out;
  std::map<std::string, int> declared;
  for (const auto& d : f.declarations) declared[d.name] = d.arity;

  auto check = [&](const Formula& formula, std::size_t offset) {
    std::map<std::pair<std::string, int>, int> used;
    count_usage(formula, used);
    for (const auto& [key, n] : used) {
      const auto& [name, arity] = key;
      auto it = declared.find(name);
      std::ostringstream os;
      if (it == declared.end()) {
        os << "undeclared predicate " << name << "/" << arity;
        out.push_back(make_diag(f.raw_text, offset, os.str(), name));
      } else if (it->second != arity) {
        os << "arity mismatch: " << name << " used with arity " << arity
           << ", declared " << name << "/" << it->second;
        out.push_back(make_diag(f.raw_text, offset, os.str(), name));
      }
    }
  };

  for (const auto& p : f.premises)
    if (p.formula) check(*p.formula, p.offset);
  if (f.goal) {
    check(*f.goal, goal_offset);
    for (const auto& v : free_variables(*f.goal))
      out.push_back(make_diag(f.raw_text, goal_offset,
                              "free variable '" + v + "' in conclusion", v));
  }
  return out;
}

Result<Formulation, std::vector<ParseDiagnostic>> parse_program(
    std::string_view text) {
  std::vector<ParseDiagnostic> diags;

  // Candidate region: prefer the first fenced block containing all three
  // section headers, else the whole message.
  std::string_view region = text;
  std::size_t region_base = 0;
  {
    std::size_t pos = 0;
    while (true) {
      std::size_t open = text.find("```", pos);
      if (open == std::string_view::npos) break;
      std::size_t content = text.find('\n', open);
      if (content == std::string_view::npos) break;
      ++content;
      std::size_t close = text.find("```", content);
      if (close == std::string_view::npos) break;
      std::string_view body = text.substr(content, close - content);
      bool has_all = false;
      {
        int seen = 0;
        for (const Line& l : split_lines(body, 0)) {
          Header h = header_of(l.text);
          if (h == Header::Predicates) seen |= 1;
          if (h == Header::Premises) seen |= 2;
          if (h == Header::Conclusion) seen |= 4;
        }
        has_all = seen == 7;
      }
      if (has_all) {
        region = body;
        region_base = content;
        break;
      }
      pos = close + 3;
    }
  }

  auto lines = split_lines(region, region_base);

  Section preds, prems, concl;
  Header current = Header::None;
  for (const Line& l : lines) {
    Header h = header_of(l.text);
    if (h != Header::None) {
      Section& s = h == Header::Predicates  ? preds
                   : h == Header::Premises ? prems
                                           : concl;
      // First occurrence wins; later duplicates are treated as prose.
      if (!s.present && (h == Header::Predicates || preds.present)) {
        s.present = true;
        s.header_offset = l.offset;
        current = h;
      }
      continue;
    }
    switch (current) {
      case Header::None:
        break;
      case Header::Predicates:
        preds.lines.push_back(l);
        break;
      case Header::Premises:
        prems.lines.push_back(l);
        break;
      case Header::Conclusion:
        concl.lines.push_back(l);
        break;
    }
  }

  if (!preds.present) {
    diags.push_back(make_diag(text, 0, "no formulation block found"));
    return Result<Formulation, std::vector<ParseDiagnostic>>(std::move(diags));
  }
  if (!prems.present)
    diags.push_back(
        make_diag(text, preds.header_offset, "missing Premises: section"));
  if (!concl.present)
    diags.push_back(
        make_diag(text, preds.header_offset, "missing Conclusion: section"));

  Formulation out;
  out.raw_text = std::string(text);

  for (const Line& l : preds.lines) {
    if (is_blank(l.text) || is_fence(l.text)) continue;
    std::size_t offset = l.offset;
    std::string_view body = strip_bullet(l.text, offset);
    auto [head, gloss] = split_annotation(body);
    std::string_view decl = trim(head);
    std::size_t slash = decl.find('/');
    bool ok = slash != std::string_view::npos && slash > 0;
    std::string name;
    int arity = -1;
    if (ok) {
      name = std::string(decl.substr(0, slash));
      std::string_view num = decl.substr(slash + 1);
      ok = is_predicate_name(name) && !num.empty() &&
           std::all_of(num.begin(), num.end(), [](char c) {
             return std::isdigit(static_cast<unsigned char>(c));
           });
      if (ok) arity = std::stoi(std::string(num));
    }
    if (!ok) {
      diags.push_back(make_diag(text, offset,
                                "invalid predicate declaration; expected "
                                "Name/arity",
                                std::string(decl)));
      continue;
    }
    bool dup = std::any_of(
        out.declarations.begin(), out.declarations.end(),
        [&](const PredicateDecl& d) { return d.name == name; });
    if (dup) {
      diags.push_back(make_diag(text, offset,
                                "duplicate declaration of " + name, name));
      continue;
    }
    out.declarations.push_back({std::move(name), arity, std::string(gloss)});
  }

  for (const Line& l : prems.lines) {
    if (is_blank(l.text) || is_fence(l.text)) continue;
    std::size_t offset = l.offset;
    std::string_view body = strip_bullet(l.text, offset);
    auto [head, source] = split_annotation(body);
    auto parsed = parse_formula(head);
    if (!parsed) {
      diags.push_back(shift_diag(text, std::move(parsed.error()), offset));
      continue;
    }
    out.premises.push_back(
        {std::move(parsed.value()), std::string(source), offset});
  }

  std::size_t goal_offset = concl.header_offset;
  if (concl.present) {
    bool found = false;
    for (const Line& l : concl.lines) {
      if (is_blank(l.text) || is_fence(l.text)) continue;
      std::size_t offset = l.offset;
      std::string_view body = strip_bullet(l.text, offset);
      auto [head, note] = split_annotation(body);
      (void)note;
      auto parsed = parse_formula(head);
      if (!parsed) {
        diags.push_back(shift_diag(text, std::move(parsed.error()), offset));
      } else {
        out.goal = std::move(parsed.value());
        goal_offset = offset;
      }
      found = true;
      break;  // the conclusion is a single formula; trailing prose ignored
    }
    if (!found)
      diags.push_back(make_diag(text, concl.header_offset,
                                "expected formula after Conclusion:"));
  }

  for (auto& d : validate_formulation(out, goal_offset))
    diags.push_back(std::move(d));

  if (!diags.empty())
    return Result<Formulation, std::vector<ParseDiagnostic>>(std::move(diags));
  return Result<Formulation, std::vector<ParseDiagnostic>>(std::move(out));
}

std::string render_program(const Formulation& f) {
  std::ostringstream os;
  os << "Predicates:\n";
  for (const auto& d : f.declarations) {
    os << d.name << "/" << d.arity;
    if (!d.gloss.empty()) os << " ::: " << d.gloss;
    os << "\n";
  }
  os << "Premises:\n";
  for (const auto& p : f.premises) {
    os << render_formula(*p.formula);
    if (!p.source.empty()) os << " ::: " << p.source;
    os << "\n";
  }
  os << "Conclusion:\n";
  if (f.goal) os << render_formula(*f.goal) << "\n";
  return os.str();
}

}  // namespace resolute::fol
