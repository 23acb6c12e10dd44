// SPDX-License-Identifier: Apache-2.0
#include "resolute/llm/recording.hpp"

namespace resolute::llm {

// Named (not anonymous-namespace) so the friend declaration in the
// backend header applies.
class RecordingGateway : public Gateway {
 public:
  RecordingGateway(RecordingBackend& backend, std::unique_ptr<Gateway> inner,
                   std::string problem)
      : backend_(backend),
        inner_(std::move(inner)),
        problem_(std::move(problem)) {}

  CompletionResult complete(const CompletionRequest& request) override {
    CompletionResult result = inner_->complete(request);
    if (result) backend_.record(problem_, request, result.value());
    return result;
  }

 private:
  RecordingBackend& backend_;
  std::unique_ptr<Gateway> inner_;
  std::string problem_;
};

RecordingBackend::RecordingBackend(std::shared_ptr<Backend> inner)
    : inner_(std::move(inner)) {}

std::unique_ptr<Gateway> RecordingBackend::session(
    const std::string& problem_id) {
  return std::make_unique<RecordingGateway>(*this, inner_->session(problem_id),
                                            problem_id);
}

Transcript RecordingBackend::transcript() const {
  std::lock_guard lock(mutex_);
  return captured_;
}

void RecordingBackend::record(const std::string& problem,
                              const CompletionRequest& request,
                              const std::string& response) {
  std::lock_guard lock(mutex_);
  std::size_t index = next_index_[{problem, request.tag}]++;
  captured_.entries.push_back(
      {problem, request.tag, index, request_hash(request), response});
}

}  // namespace resolute::llm
