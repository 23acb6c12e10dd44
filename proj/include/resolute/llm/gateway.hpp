// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "resolute/result.hpp"

namespace resolute::llm {

enum class Role { System, User, Assistant };

std::string_view role_name(Role r);

struct ChatMessage {
  Role role = Role::User;
  std::string content;
};

struct CompletionRequest {
  std::vector<ChatMessage> messages;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 1024;
  // Free-form label used for transcript bookkeeping: "formulate",
  // "refine", or "judge".
  std::string tag;
};

enum class GatewayErrorKind {
  Transport,
  RateLimitExhausted,
  TranscriptExhausted,
  TranscriptMismatch,
};

std::string_view gateway_error_name(GatewayErrorKind k);

struct GatewayError {
  GatewayErrorKind kind = GatewayErrorKind::Transport;
  std::string message;
};

using CompletionResult = Result<std::string, GatewayError>;

// One model-service conversation scope (one problem's worth of calls).
class Gateway {
 public:
  virtual ~Gateway() = default;
  virtual CompletionResult complete(const CompletionRequest& request) = 0;
};

// Factory for per-problem sessions. Implementations decide how much state
// the sessions share (HTTP connection budget, transcript cursors, ...).
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::unique_ptr<Gateway> session(const std::string& problem_id) = 0;
};

// FNV-1a over everything that shapes a completion: tag, model,
// temperature, and each message's role and content.
std::uint64_t request_fingerprint(const CompletionRequest& request);

// Fingerprint rendered as "fnv1a:<16 hex digits>" for transcript files.
std::string request_hash(const CompletionRequest& request);

}  // namespace resolute::llm
