#pragma once

#include <stdexcept>
#include <string>

namespace samfit {

// Every failure mode the library reports deliberately. CLI exit codes and
// test assertions key off these, so new conditions get a new enumerator
// rather than a bare runtime_error.
enum class ErrorCode {
  EvenGridSize,
  GridTooSmall,
  NonPositiveSnr,
  UnequalGridSizesForSnr,
  LatticeTooLarge,
  EvenLength,
  NonFiniteInput,
  CutOutOfRange,
  KOutOfRange,
  NonPositiveTau2,
  D0OutOfRange,
  EmptyPool,
  ZeroTau,
  NegativeLambda,
  EmptyGrid,
  InconsistentCandidate,
  DesignMismatch,
  ZeroVariance,
  BadId,
  InvalidGamma,
  InvalidQ,
  SearchSpaceTooLarge,
  MalformedInput,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace samfit
