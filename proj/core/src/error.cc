#include "actree/error.hpp"

namespace actree {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kArcCountMismatch: return "ArcCountMismatch";
    case ErrorCode::kMissingProblemLine: return "MissingProblemLine";
    case ErrorCode::kWrongProblemTag: return "WrongProblemTag";
    case ErrorCode::kArcBeforeHeader: return "ArcBeforeHeader";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kUnreachableNode: return "UnreachableNode";
    case ErrorCode::kInconsistentInput: return "InconsistentInput";
    case ErrorCode::kOverlapRequired: return "OverlapRequired";
    case ErrorCode::kSizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::kFamilyInvariant: return "FamilyInvariant";
  }
  return "Unknown";
}

namespace {

std::string Describe(ErrorCode code, const std::string& message, std::optional<std::size_t> line) {
  std::string out(ErrorCodeName(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(Describe(code, message, line)), code_(code), line_(line) {}

}  // namespace actree
