#ifndef INFOMASK_ERROR_H_
#define INFOMASK_ERROR_H_

#include <stdexcept>
#include <string>

namespace infomask {

enum class ErrorCode {
  kInvalidPmf,
  kUnknownAxis,
  kOverlappingSets,
  kDimensionMismatch,
  kSizeGuard,
  kOutOfRange,
  kInfeasibleStart,
  kLengthMismatch,
  kEmptyRegion,
  kDegenerateLp,
  kUnsupportedFormat,
  kParseError,
  kNormalizationError,
  kNegativeEntry,
  kShapeMismatch,
  kInvalidArgument,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The code is the
// stable, testable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace infomask

#endif  // INFOMASK_ERROR_H_
