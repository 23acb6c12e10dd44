// SPDX-License-Identifier: Apache-2.0
#include "resolute/prover/saturate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <tuple>

namespace resolute::prover {

namespace {

// Renames x* variables to y* so the given clause is standardized apart
// from the clause it resolves against.
fol::Term to_y(const fol::Term& t) {
  if (t.kind == fol::Term::Kind::Variable && !t.name.empty() &&
      t.name[0] == 'x')
    return fol::Term::var("y" + t.name.substr(1));
  fol::Term out = t;
  for (auto& a : out.args) a = to_y(a);
  return out;
}

Clause rename_apart(const Clause& c) {
  Clause out = c;
  for (auto& l : out.literals)
    for (auto& a : l.args) a = to_y(a);
  return out;
}

Clause resolve_clauses(const Clause& p1, const Clause& p2y, std::size_t i,
                       std::size_t j, const Subst& s) {
  Clause raw;
  for (std::size_t k = 0; k < p1.literals.size(); ++k)
    if (k != i) raw.literals.push_back(apply_subst(p1.literals[k], s));
  for (std::size_t k = 0; k < p2y.literals.size(); ++k)
    if (k != j) raw.literals.push_back(apply_subst(p2y.literals[k], s));
  return canonicalize(raw);
}

// Ancestors of the empty clause, ascending by id, original ids preserved.
std::vector<TraceStep> refutation_slice(const std::vector<TraceStep>& steps,
                                        std::size_t empty_id) {
  std::set<std::size_t> keep;
  std::vector<std::size_t> work{empty_id};
  while (!work.empty()) {
    std::size_t id = work.back();
    work.pop_back();
    if (!keep.insert(id).second) continue;
    const TraceStep& st = steps[id];
    if (st.kind == TraceStep::Kind::Resolve) {
      work.push_back(st.parent1);
      work.push_back(st.parent2);
    } else if (st.kind == TraceStep::Kind::Factor) {
      work.push_back(st.parent1);
    }
  }
  std::vector<TraceStep> out;
  out.reserve(keep.size());
  for (std::size_t id : keep) out.push_back(steps[id]);
  return out;
}

}  // namespace

SaturationResult saturate(const std::vector<Clause>& input,
                          const ResourceLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  SaturationResult res;
  std::vector<TraceStep> steps;
  std::set<Clause> seen;
  // (weight, enqueue order, id): lightest first, FIFO among equals.
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> unprocessed;
  std::vector<std::size_t> processed;
  std::size_t seq = 0;

  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };
  auto finish = [&](SatStatus status,
                    std::size_t empty_id = 0) -> SaturationResult {
    res.status = status;
    res.stats.elapsed_seconds = elapsed();
    if (status == SatStatus::Refuted)
      res.trace = refutation_slice(steps, empty_id);
    return res;
  };
  auto keep = [&](TraceStep step) {
    step.id = steps.size();
    seen.insert(step.clause);
    unprocessed.insert({clause_weight(step.clause), seq++, step.id});
    steps.push_back(std::move(step));
    res.stats.kept++;
    return steps.back().id;
  };

  for (const Clause& raw : input) {
    Clause c = canonicalize(raw);
    if (is_tautology(c) || seen.count(c)) continue;
    TraceStep st;
    st.clause = std::move(c);
    std::size_t id = keep(std::move(st));
    if (steps[id].clause.empty()) return finish(SatStatus::Refuted, id);
  }

  while (!unprocessed.empty()) {
    if (elapsed() > limits.max_seconds || res.stats.kept > limits.max_clauses)
      return finish(SatStatus::ResourceOut);
    res.stats.iterations++;

    auto it = unprocessed.begin();
    const std::size_t gid = std::get<2>(*it);
    unprocessed.erase(it);
    const Clause given = steps[gid].clause;

    bool redundant = false;
    for (std::size_t pid : processed) {
      if (subsumes(steps[pid].clause, given)) {
        redundant = true;
        break;
      }
    }
    if (redundant) {
      res.stats.subsumed++;
      continue;
    }
    processed.push_back(gid);

    std::vector<TraceStep> children;
    // Factoring within the given clause.
    for (std::size_t i = 0; i < given.literals.size(); ++i) {
      for (std::size_t j = i + 1; j < given.literals.size(); ++j) {
        const Literal& a = given.literals[i];
        const Literal& b = given.literals[j];
        if (a.positive != b.positive || a.pred != b.pred) continue;
        auto s = unify_args(a.args, b.args);
        if (!s) continue;
        TraceStep st;
        st.kind = TraceStep::Kind::Factor;
        st.parent1 = gid;
        st.lit1 = i;
        st.lit2 = j;
        st.subst = *s;
        st.clause = canonicalize(apply_subst(given, *s));
        children.push_back(std::move(st));
      }
    }
    // Binary resolution of every processed clause (given included, for
    // self-resolution) against the renamed given clause.
    const Clause given_y = rename_apart(given);
    for (std::size_t pid : processed) {
      const Clause& p1 = steps[pid].clause;
      for (std::size_t i = 0; i < p1.literals.size(); ++i) {
        for (std::size_t j = 0; j < given_y.literals.size(); ++j) {
          const Literal& a = p1.literals[i];
          const Literal& b = given_y.literals[j];
          if (a.positive == b.positive || a.pred != b.pred) continue;
          auto s = unify_args(a.args, b.args);
          if (!s) continue;
          TraceStep st;
          st.kind = TraceStep::Kind::Resolve;
          st.parent1 = pid;
          st.parent2 = gid;
          st.lit1 = i;
          st.lit2 = j;
          st.subst = *s;
          st.clause = resolve_clauses(p1, given_y, i, j, *s);
          children.push_back(std::move(st));
        }
      }
    }

    for (auto& child : children) {
      res.stats.generated++;
      if (child.clause.empty())
        return finish(SatStatus::Refuted, keep(std::move(child)));
      if (is_tautology(child.clause)) continue;
      if (clause_weight(child.clause) > limits.max_clause_weight) {
        res.stats.discarded_by_weight++;
        continue;
      }
      if (seen.count(child.clause)) continue;
      keep(std::move(child));
      if (res.stats.kept > limits.max_clauses)
        return finish(SatStatus::ResourceOut);
    }
  }

  // Exhaustion only counts as saturation if nothing was thrown away: a
  // weight-capped run may have discarded the very clause a refutation
  // needed.
  return finish(res.stats.discarded_by_weight > 0 ? SatStatus::ResourceOut
                                                  : SatStatus::Saturated);
}

bool verify_trace(const std::vector<TraceStep>& trace) {
  std::map<std::size_t, const TraceStep*> by_id;
  for (const auto& st : trace) by_id[st.id] = &st;
  for (const auto& st : trace) {
    if (st.kind == TraceStep::Kind::Input) continue;
    auto p1 = by_id.find(st.parent1);
    if (p1 == by_id.end()) return false;
    if (st.kind == TraceStep::Kind::Factor) {
      const Clause& c = p1->second->clause;
      if (st.lit1 >= c.literals.size() || st.lit2 >= c.literals.size())
        return false;
      const Literal& a = c.literals[st.lit1];
      const Literal& b = c.literals[st.lit2];
      if (a.positive != b.positive || a.pred != b.pred) return false;
      auto s = unify_args(a.args, b.args);
      if (!s || *s != st.subst) return false;
      if (canonicalize(apply_subst(c, *s)) != st.clause) return false;
      continue;
    }
    auto p2 = by_id.find(st.parent2);
    if (p2 == by_id.end()) return false;
    const Clause& c1 = p1->second->clause;
    const Clause c2 = rename_apart(p2->second->clause);
    if (st.lit1 >= c1.literals.size() || st.lit2 >= c2.literals.size())
      return false;
    const Literal& a = c1.literals[st.lit1];
    const Literal& b = c2.literals[st.lit2];
    if (a.positive == b.positive || a.pred != b.pred) return false;
    auto s = unify_args(a.args, b.args);
    if (!s || *s != st.subst) return false;
    if (resolve_clauses(c1, c2, st.lit1, st.lit2, *s) != st.clause)
      return false;
  }
  return true;
}

std::string render_trace(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const auto& st : trace) {
    out += std::to_string(st.id) + ": " + render_clause(st.clause) + " <- ";
    switch (st.kind) {
      case TraceStep::Kind::Input:
        out += "input";
        break;
      case TraceStep::Kind::Resolve:
        out += "resolve(" + std::to_string(st.parent1) + "@" +
               std::to_string(st.lit1) + ", " + std::to_string(st.parent2) +
               "@" + std::to_string(st.lit2) + ", " + render_subst(st.subst) +
               ")";
        break;
      case TraceStep::Kind::Factor:
        out += "factor(" + std::to_string(st.parent1) + "@" +
               std::to_string(st.lit1) + "/" + std::to_string(st.lit2) + ", " +
               render_subst(st.subst) + ")";
        break;
    }
    out += "\n";
  }
  return out;
}

std::string_view sat_status_name(SatStatus s) {
  switch (s) {
    case SatStatus::Refuted:
      return "REFUTED";
    case SatStatus::Saturated:
      return "SATURATED";
    case SatStatus::ResourceOut:
      return "RESOURCE_OUT";
  }
  return "?";
}

}  // namespace resolute::prover
