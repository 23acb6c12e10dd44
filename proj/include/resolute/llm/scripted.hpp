// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "resolute/llm/gateway.hpp"
#include "resolute/llm/transcript.hpp"

namespace resolute::llm {

// Deterministic replay backend. Each (problem, tag) pair owns a cursor
// that advances through its transcript entries in order. A transcript
// whose entries are all unscoped (no problem field) serves every session
// from the one shared cursor set, which suits single-problem fixtures.
//
// By default requests are matched by (tag, index) only, so prompt-wording
// refactors do not invalidate a transcript; verify_hashes turns on strict
// content pinning for regression fixtures.
class ScriptedBackend : public Backend {
 public:
  struct Options {
    bool verify_hashes = false;
  };

  // Fails when some (problem, tag) index sequence is not dense from zero.
  // (Overload instead of a default argument: GCC 11 rejects nested-class
  // defaults that rely on member initializers of the enclosing class.)
  static Result<std::unique_ptr<ScriptedBackend>, std::string> make(
      Transcript transcript, Options options);
  static Result<std::unique_ptr<ScriptedBackend>, std::string> make(
      Transcript transcript);

  std::unique_ptr<Gateway> session(const std::string& problem_id) override;

  // Calls served so far across all sessions.
  std::size_t calls() const;

 private:
  friend class ScriptedGateway;

  ScriptedBackend(Transcript transcript, Options options);

  CompletionResult serve(const std::string& problem,
                         const CompletionRequest& request);

  Options options_;
  bool scoped_ = false;  // any entry carries a problem id
  // (problem, tag) -> responses in index order.
  std::map<std::pair<std::string, std::string>,
           std::vector<TranscriptEntry>>
      entries_;
  std::map<std::pair<std::string, std::string>, std::size_t> cursors_;
  std::size_t calls_ = 0;
  mutable std::mutex mutex_;
};

}  // namespace resolute::llm
