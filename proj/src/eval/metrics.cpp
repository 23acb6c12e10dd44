// SPDX-License-Identifier: Apache-2.0
#include "resolute/eval/metrics.hpp"

#include <algorithm>

namespace resolute::eval {

Metrics compute_metrics(const std::vector<agents::RunRecord>& records,
                        const std::map<std::string, std::string>& gold) {
  Metrics m;
  int max_rounds = 0;
  for (const agents::RunRecord& r : records)
    if (gold.count(r.problem_id)) max_rounds = std::max(max_rounds, r.max_rounds);

  m.per_round_accuracy.assign(static_cast<std::size_t>(max_rounds) + 1, 0.0);
  m.corrected_per_round.assign(static_cast<std::size_t>(max_rounds) + 1, 0);
  m.reverted_per_round.assign(static_cast<std::size_t>(max_rounds) + 1, 0);

  std::size_t correct = 0;
  std::size_t executable = 0;
  std::size_t executable_correct = 0;

  for (const agents::RunRecord& r : records) {
    auto it = gold.find(r.problem_id);
    if (it == gold.end()) {
      ++m.skipped;
      continue;
    }
    const std::string& answer = it->second;
    ++m.n_problems;

    if (r.final_answer == answer) ++correct;
    if (r.final_outcome != prover::Outcome::ExecutionError) {
      ++executable;
      if (r.final_answer == answer) ++executable_correct;
    }

    for (std::size_t k = 0; k <= static_cast<std::size_t>(max_rounds); ++k) {
      bool correct_at_k = r.answer_at_round(k) == answer;
      if (correct_at_k) m.per_round_accuracy[k] += 1.0;
      if (k > 0 && correct_at_k && r.answer_at_round(k - 1) != answer)
        ++m.corrected_per_round[k];
      if (k > 0 && k <= r.rounds.size() &&
          r.rounds[k - 1].action == agents::RoundAction::Reverted)
        ++m.reverted_per_round[k];
    }
  }

  if (m.n_problems > 0) {
    double n = static_cast<double>(m.n_problems);
    m.accuracy = static_cast<double>(correct) / n;
    m.execution_rate = static_cast<double>(executable) / n;
    for (double& a : m.per_round_accuracy) a /= n;
  }
  if (executable > 0)
    m.execution_accuracy =
        static_cast<double>(executable_correct) / static_cast<double>(executable);
  return m;
}

}  // namespace resolute::eval
