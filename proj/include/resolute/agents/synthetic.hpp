// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "resolute/agents/types.hpp"
#include "resolute/llm/gateway.hpp"

namespace resolute::agents {

// One problem in the synthetic family, with the canned response pool the
// simulated model draws from.
struct SyntheticProblem {
  Problem problem;
  std::string initial;   // formulate response (round 0)
  std::string good;      // correct program, served on a successful repair
  std::string degraded;  // served when refinement degrades instead
};

// Simulated model service for desk-scale experiments: formulation and
// refinement responses come from the problem's canned pool — each refine
// call repairs with the configured probability and degrades otherwise —
// and judge requests are answered by executing both presented programs
// and voting for the one whose answer matches the problem's gold label
// (a "perfect" judge). All randomness is seeded per problem, so runs are
// reproducible and independent of scheduling.
class SyntheticBackend : public llm::Backend {
 public:
  struct Options {
    double repair_probability = 0.6;
    std::uint64_t seed = 0;
  };

  SyntheticBackend(std::vector<SyntheticProblem> problems, Options options);

  std::unique_ptr<llm::Gateway> session(const std::string& problem_id) override;

 private:
  friend class SyntheticGateway;

  llm::CompletionResult serve(const SyntheticProblem& problem,
                              std::uint64_t& rng_state,
                              const llm::CompletionRequest& request);

  std::string answer_of(const std::string& program_text) const;

  std::map<std::string, SyntheticProblem> problems_;
  Options options_;
};

// Deterministic problem family for qualitative refinement-curve
// experiments: 60% gold-Unknown problems whose initial formulation is
// already correct (refinement can only hurt them), 25% gold-True and 15%
// gold-False problems whose initial formulation is broken (refinement can
// repair them).
std::vector<SyntheticProblem> make_synthetic_problems(std::size_t count);

}  // namespace resolute::agents
