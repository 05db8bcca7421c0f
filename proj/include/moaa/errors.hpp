#pragma once

#include <stdexcept>
#include <string>

namespace moaa {

enum class ErrorCode {
  config_error,        // unknown model, bad config file, missing input
  invalid_argument,    // caller violated a precondition
  protocol_error,      // malformed endpoint response
  transient_failure,   // retryable endpoint failure (internal to the retry loop)
  permanent_failure,   // retries exhausted or non-retryable endpoint failure
  script_miss,         // mock script has no response for a request
  parse_failure,       // criteria block could not be parsed
  verdict_parse_failure,
  synthesis_failure,   // a MoA layer member failed
  io_error,
  format_error,        // malformed dataset line in strict mode
  sample_too_large,
  empty_batch,
  empty_inputs,
  empty_space,
  nonfinite_input,
  duplicate_id,
  manifest_locked,
};

const char* error_code_name(ErrorCode code);

class MoaaError : public std::runtime_error {
 public:
  MoaaError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moaa
