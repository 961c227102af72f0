#include "chordsieve/error.hpp"

namespace chordsieve {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kMissingPoint: return "MissingPoint";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kNotClassifiable: return "NotClassifiable";
    case ErrorCode::kSubsetTooLarge: return "SubsetTooLarge";
    case ErrorCode::kSubsetSizeMismatch: return "SubsetSizeMismatch";
    case ErrorCode::kStalled: return "Stalled";
    case ErrorCode::kWrongUnmatchedCount: return "WrongUnmatchedCount";
    case ErrorCode::kNotOneCrossing: return "NotOneCrossing";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kInvalidShift: return "InvalidShift";
    case ErrorCode::kInexactDivision: return "InexactDivision";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace chordsieve
