// SPDX-License-Identifier: Apache-2.0
#include "resolute/llm/gateway.hpp"

#include <cstdio>

namespace resolute::llm {

std::string_view role_name(Role r) {
  switch (r) {
    case Role::System:
      return "system";
    case Role::User:
      return "user";
    case Role::Assistant:
      return "assistant";
  }
  return "?";
}

std::string_view gateway_error_name(GatewayErrorKind k) {
  switch (k) {
    case GatewayErrorKind::Transport:
      return "Transport";
    case GatewayErrorKind::RateLimitExhausted:
      return "RateLimitExhausted";
    case GatewayErrorKind::TranscriptExhausted:
      return "TranscriptExhausted";
    case GatewayErrorKind::TranscriptMismatch:
      return "TranscriptMismatch";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  // Field separator so "ab"+"c" and "a"+"bc" differ.
  h ^= 0x1f;
  h *= kFnvPrime;
}

}  // namespace

std::uint64_t request_fingerprint(const CompletionRequest& request) {
  std::uint64_t h = kFnvOffset;
  fnv(h, request.tag);
  fnv(h, request.model);
  char temp[32];
  std::snprintf(temp, sizeof temp, "%.4f", request.temperature);
  fnv(h, temp);
  for (const auto& m : request.messages) {
    fnv(h, role_name(m.role));
    fnv(h, m.content);
  }
  return h;
}

std::string request_hash(const CompletionRequest& request) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(request_fingerprint(request)));
  return buf;
}

}  // namespace resolute::llm
