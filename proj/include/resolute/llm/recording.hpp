// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "resolute/llm/gateway.hpp"
#include "resolute/llm/transcript.hpp"

namespace resolute::llm {

// Wraps another backend and captures every successful completion as a
// transcript entry {problem, tag, index, request_hash, response}. Failed
// calls record nothing, so a retried-then-successful request appears
// exactly once.
class RecordingBackend : public Backend {
 public:
  explicit RecordingBackend(std::shared_ptr<Backend> inner);

  std::unique_ptr<Gateway> session(const std::string& problem_id) override;

  // Entries in call-completion order; safe to call once sessions quiesce.
  Transcript transcript() const;

 private:
  friend class RecordingGateway;

  void record(const std::string& problem, const CompletionRequest& request,
              const std::string& response);

  std::shared_ptr<Backend> inner_;
  Transcript captured_;
  std::map<std::pair<std::string, std::string>, std::size_t> next_index_;
  mutable std::mutex mutex_;
};

}  // namespace resolute::llm
