// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resolute/agents/record.hpp"
#include "resolute/result.hpp"

namespace resolute::eval {

struct Metrics {
  std::size_t n_problems = 0;  // records included (those with a gold label)
  std::size_t skipped = 0;     // records without a gold label
  double accuracy = 0.0;       // correct / n_problems
  // E_r: fraction whose final formulation executed (outcome is not
  // EXECUTION_ERROR).
  double execution_rate = 0.0;
  // E_a: fraction correct among the executable; null when nothing
  // executed.
  std::optional<double> execution_accuracy;
  // Entry k: accuracy had every run stopped after k refinement rounds;
  // k ranges 0..max_rounds, so the last entry equals `accuracy`.
  std::vector<double> per_round_accuracy;
  // Entry k (k >= 1): problems whose answer flipped wrong -> correct at
  // round k. Entry 0 is always zero.
  std::vector<std::size_t> corrected_per_round;
  // Entry k (k >= 1): problems whose round-k candidate was reverted.
  std::vector<std::size_t> reverted_per_round;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

// Pure function of its inputs: bit-for-bit reproducible. Records whose id
// is absent from `gold` are excluded and tallied in `skipped`.
Metrics compute_metrics(const std::vector<agents::RunRecord>& records,
                        const std::map<std::string, std::string>& gold);

}  // namespace resolute::eval
