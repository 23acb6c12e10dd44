// SPDX-License-Identifier: Apache-2.0
#include "resolute/llm/scripted.hpp"

namespace resolute::llm {

// Named (not anonymous-namespace) so the friend declaration in the
// backend header applies.
class ScriptedGateway : public Gateway {
 public:
  ScriptedGateway(ScriptedBackend& backend, std::string problem)
      : backend_(backend), problem_(std::move(problem)) {}

  CompletionResult complete(const CompletionRequest& request) override {
    return backend_.serve(problem_, request);
  }

 private:
  ScriptedBackend& backend_;
  std::string problem_;
};

ScriptedBackend::ScriptedBackend(Transcript transcript, Options options)
    : options_(options) {
  for (auto& e : transcript.entries) {
    if (!e.problem.empty()) scoped_ = true;
    entries_[{e.problem, e.tag}].push_back(std::move(e));
  }
}

Result<std::unique_ptr<ScriptedBackend>, std::string> ScriptedBackend::make(
    Transcript transcript) {
  return make(std::move(transcript), Options{});
}

Result<std::unique_ptr<ScriptedBackend>, std::string> ScriptedBackend::make(
    Transcript transcript, Options options) {
  std::unique_ptr<ScriptedBackend> backend(
      new ScriptedBackend(std::move(transcript), options));
  for (const auto& [key, list] : backend->entries_) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].index != i)
        return "transcript indices not dense for tag '" + key.second +
               "'" +
               (key.first.empty() ? std::string()
                                  : " (problem " + key.first + ")") +
               ": expected " + std::to_string(i) + ", found " +
               std::to_string(list[i].index);
    }
  }
  return backend;
}

std::unique_ptr<Gateway> ScriptedBackend::session(
    const std::string& problem_id) {
  return std::make_unique<ScriptedGateway>(*this, problem_id);
}

std::size_t ScriptedBackend::calls() const {
  std::lock_guard lock(mutex_);
  return calls_;
}

CompletionResult ScriptedBackend::serve(const std::string& problem,
                                        const CompletionRequest& request) {
  std::lock_guard lock(mutex_);
  calls_++;
  // Unscoped transcripts answer every session from the shared cursors.
  std::pair<std::string, std::string> key{scoped_ ? problem : "",
                                          request.tag};
  auto it = entries_.find(key);
  std::size_t cursor = cursors_[key];
  if (it == entries_.end() || cursor >= it->second.size()) {
    std::string scope =
        key.first.empty() ? std::string() : " (problem " + key.first + ")";
    return GatewayError{GatewayErrorKind::TranscriptExhausted,
                        "transcript exhausted for tag '" + request.tag +
                            "' at index " + std::to_string(cursor) + scope};
  }
  const TranscriptEntry& entry = it->second[cursor];
  cursors_[key] = cursor + 1;
  if (options_.verify_hashes && !entry.request_hash.empty()) {
    std::string actual = request_hash(request);
    if (actual != entry.request_hash)
      return GatewayError{
          GatewayErrorKind::TranscriptMismatch,
          "request does not match pinned transcript entry (tag '" +
              request.tag + "', index " + std::to_string(entry.index) +
              "): recorded " + entry.request_hash + ", got " + actual};
  }
  return entry.response;
}

}  // namespace resolute::llm
