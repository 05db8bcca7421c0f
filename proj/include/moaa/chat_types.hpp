#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace moaa {

struct SamplingParams {
  double temperature = 0.8;
  int max_tokens = 1024;
  std::optional<int64_t> seed;
};

struct ModelSpec {
  std::string model_id;
  std::string endpoint;  // URL or "mock"
  double price_per_million_tokens = 0.0;
  int max_concurrency = 4;
  SamplingParams default_sampling;
  std::string api_key_env;  // env var holding the bearer token, empty = none

  void validate() const;  // invalid_argument on bad fields
};

enum class Role { system, user, assistant };

const char* role_name(Role role);
Role role_from_name(const std::string& name);

struct ChatMessage {
  Role role = Role::user;
  std::string content;
};

struct ChatRequest {
  std::string model_id;
  std::vector<ChatMessage> messages;
  SamplingParams sampling;

  static ChatRequest user_prompt(std::string model_id, std::string prompt, SamplingParams sampling);
  void validate() const;  // non-empty, valid role alternation
  const std::string& last_user_content() const;
};

struct ChatResponse {
  std::string content;
  int64_t prompt_tokens = 0;
  int64_t completion_tokens = 0;
  std::string model_id;
  int64_t latency_ms = 0;
  int attempts = 1;
};

struct RetryPolicy {
  int max_attempts = 5;
  int base_delay_ms = 500;
  int max_delay_ms = 30000;
  bool jitter = true;
};

/// Stable digest of (model_id, messages, temperature). Seeds and max_tokens are
/// excluded so mock scripts survive reordering of concurrent, resampled calls.
uint64_t request_digest(const ChatRequest& request);

nlohmann::json sampling_to_json(const SamplingParams& sampling);
SamplingParams sampling_from_json(const nlohmann::json& j);
ModelSpec model_spec_from_json(const nlohmann::json& j);

}  // namespace moaa
