// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <condition_variable>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "resolute/llm/gateway.hpp"

namespace resolute::llm {

// Live chat-completion backend (OpenAI-compatible request shape).
//
// The credential is read from the environment once at construction and
// never logged or echoed. Transient failures (transport errors, 5xx,
// 429) are retried up to 3 times with exponential backoff starting at
// one second; a rate limit that survives every attempt surfaces as
// RateLimitExhausted.
class HttpBackend : public Backend {
 public:
  struct Config {
    std::string endpoint;  // base URL, e.g. "http://localhost:8089"
    std::string path = "/v1/chat/completions";
    std::string model;
    std::string credential_env = "RESOLUTE_API_KEY";
    double timeout_seconds = 60.0;
    std::size_t max_in_flight = 4;  // 0 = unlimited
  };

  // The sleeper is injectable so tests can observe backoff without
  // waiting through it.
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  // Fails when the endpoint is missing or the credential variable is
  // unset/empty. The error message names the variable, not its value.
  static Result<std::unique_ptr<HttpBackend>, std::string> make(
      Config config, Sleeper sleeper = nullptr);

  std::unique_ptr<Gateway> session(const std::string& problem_id) override;

 private:
  friend class HttpGateway;

  HttpBackend(Config config, std::string credential, Sleeper sleeper);

  CompletionResult post(const CompletionRequest& request);

  void enter();
  void leave();

  Config config_;
  std::string credential_;
  Sleeper sleeper_;
  std::size_t in_flight_ = 0;
  std::mutex mutex_;
  std::condition_variable slot_free_;
};

}  // namespace resolute::llm
