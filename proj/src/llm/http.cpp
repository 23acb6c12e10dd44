// SPDX-License-Identifier: Apache-2.0
#include "resolute/llm/http.hpp"

#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace resolute::llm {

namespace {

constexpr int kMaxAttempts = 4;  // one initial try + three retries

}  // namespace

// Named (not anonymous-namespace) so the friend declaration in the
// backend header applies.
class HttpGateway : public Gateway {
 public:
  explicit HttpGateway(HttpBackend& backend) : backend_(backend) {}

  CompletionResult complete(const CompletionRequest& request) override {
    return backend_.post(request);
  }

 private:
  HttpBackend& backend_;
};

HttpBackend::HttpBackend(Config config, std::string credential,
                         Sleeper sleeper)
    : config_(std::move(config)),
      credential_(std::move(credential)),
      sleeper_(std::move(sleeper)) {
  if (!sleeper_)
    sleeper_ = [](std::chrono::milliseconds d) {
      std::this_thread::sleep_for(d);
    };
}

Result<std::unique_ptr<HttpBackend>, std::string> HttpBackend::make(
    Config config, Sleeper sleeper) {
  if (config.endpoint.empty()) return std::string("endpoint not configured");
  const char* credential = std::getenv(config.credential_env.c_str());
  if (credential == nullptr || *credential == '\0')
    return "credential environment variable " + config.credential_env +
           " is not set";
  return std::unique_ptr<HttpBackend>(new HttpBackend(
      std::move(config), std::string(credential), std::move(sleeper)));
}

std::unique_ptr<Gateway> HttpBackend::session(const std::string&) {
  return std::make_unique<HttpGateway>(*this);
}

void HttpBackend::enter() {
  if (config_.max_in_flight == 0) return;
  std::unique_lock lock(mutex_);
  slot_free_.wait(lock,
                  [this] { return in_flight_ < config_.max_in_flight; });
  in_flight_++;
}

void HttpBackend::leave() {
  if (config_.max_in_flight == 0) return;
  {
    std::lock_guard lock(mutex_);
    in_flight_--;
  }
  slot_free_.notify_one();
}

CompletionResult HttpBackend::post(const CompletionRequest& request) {
  enter();
  // Local type so every return path below releases the in-flight slot.
  struct SlotGuard {
    HttpBackend* backend;
    ~SlotGuard() { backend->leave(); }
  } guard{this};
  (void)guard;

  nlohmann::ordered_json body;
  body["model"] = request.model.empty() ? config_.model : request.model;
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  body["messages"] = nlohmann::ordered_json::array();
  for (const auto& m : request.messages)
    body["messages"].push_back(
        {{"role", std::string(role_name(m.role))}, {"content", m.content}});
  const std::string payload = body.dump();

  httplib::Client client(config_.endpoint);
  auto timeout = std::chrono::milliseconds(
      static_cast<long long>(config_.timeout_seconds * 1000.0));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  const httplib::Headers headers{
      {"Authorization", "Bearer " + credential_}};

  bool rate_limited = false;
  std::string last_failure;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (attempt > 0)
      sleeper_(std::chrono::milliseconds(1000LL << (attempt - 1)));
    auto res =
        client.Post(config_.path, headers, payload, "application/json");
    if (!res) {
      rate_limited = false;
      last_failure = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429) {
      rate_limited = true;
      last_failure = "rate limited (HTTP 429)";
      continue;
    }
    if (res->status >= 500) {
      rate_limited = false;
      last_failure = "server error (HTTP " + std::to_string(res->status) +
                     ")";
      continue;
    }
    if (res->status < 200 || res->status >= 300)
      return GatewayError{GatewayErrorKind::Transport,
                          "request rejected (HTTP " +
                              std::to_string(res->status) + ")"};
    auto parsed = nlohmann::json::parse(res->body, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("choices") ||
        !parsed["choices"].is_array() || parsed["choices"].empty() ||
        !parsed["choices"][0].contains("message") ||
        !parsed["choices"][0]["message"].contains("content") ||
        !parsed["choices"][0]["message"]["content"].is_string())
      return GatewayError{GatewayErrorKind::Transport,
                          "malformed completion response body"};
    return parsed["choices"][0]["message"]["content"].get<std::string>();
  }
  if (rate_limited)
    return GatewayError{
        GatewayErrorKind::RateLimitExhausted,
        "rate limited on all " + std::to_string(kMaxAttempts) + " attempts"};
  return GatewayError{GatewayErrorKind::Transport,
                      last_failure + " after " +
                          std::to_string(kMaxAttempts) + " attempts"};
}

}  // namespace resolute::llm
