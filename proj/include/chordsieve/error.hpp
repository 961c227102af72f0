#pragma once

#include <stdexcept>
#include <string>

namespace chordsieve {

enum class ErrorCode {
  kDuplicatePoint,
  kMissingPoint,
  kOutOfRange,
  kParse,
  kNotClassifiable,
  kSubsetTooLarge,
  kSubsetSizeMismatch,
  kStalled,
  kWrongUnmatchedCount,
  kNotOneCrossing,
  kArityMismatch,
  kInvalidShift,
  kInexactDivision,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised while validating a matching. `point()` is the offending label,
// 1-based as in all external I/O.
class MatchingError : public Error {
 public:
  MatchingError(ErrorCode code, int point, const std::string& message)
      : Error(code, message), point_(point) {}

  int point() const noexcept { return point_; }

 private:
  int point_;
};

}  // namespace chordsieve
