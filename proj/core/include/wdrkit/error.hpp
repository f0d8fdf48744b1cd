#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdrkit {

enum class ErrorCode {
  kLoop,
  kEndpointOutOfRange,
  kNotStronglyConnected,
  kNotAnArc,
  kNotTypeRegular,
  kInvalidParameters,
  kParse,
  kUnknownRelation,
  kSizeMismatch,
  kLimitExceeded,
  kConditionMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code lets callers (the CLI in
/// particular) map failures to exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wdrkit
