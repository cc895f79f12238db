#ifndef ACTREE_ERROR_HPP_
#define ACTREE_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace actree {

enum class ErrorCode {
  // Input / parse errors.
  kMalformedLine,
  kIdOutOfRange,
  kArcCountMismatch,
  kMissingProblemLine,
  kWrongProblemTag,
  kArcBeforeHeader,
  kInvalidArgument,
  // Contract violations.
  kNegativeWeight,
  kCycleDetected,
  kUnreachableNode,
  kInconsistentInput,
  kOverlapRequired,
  kSizeGuardExceeded,
  // Structural checks that should never fire on valid inputs.
  kFamilyInvariant,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line()` is set for parse errors and
// is 1-based.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace actree

#endif  // ACTREE_ERROR_HPP_
