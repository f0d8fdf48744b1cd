#include "wdrkit/error.hpp"

namespace wdrkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoop: return "loop";
    case ErrorCode::kEndpointOutOfRange: return "endpoint out of range";
    case ErrorCode::kNotStronglyConnected: return "not strongly connected";
    case ErrorCode::kNotAnArc: return "not an arc";
    case ErrorCode::kNotTypeRegular: return "not type-regular";
    case ErrorCode::kInvalidParameters: return "invalid parameters";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kUnknownRelation: return "unknown relation";
    case ErrorCode::kSizeMismatch: return "size mismatch";
    case ErrorCode::kLimitExceeded: return "limit exceeded";
    case ErrorCode::kConditionMismatch: return "condition mismatch";
  }
  return "error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace wdrkit
