#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorCode {
  // input validation
  InvalidArgument,
  ReciprocalSumTooLarge,
  ParityMismatch,
  TooShort,
  InvalidDegrees,
  PartitionMismatch,
  OutOfRange,
  BadImageDims,
  NonPositiveTau,
  GridTooCoarse,
  EmptyMask,
  InsufficientScales,
  // computation
  DegenerateSystem,
  PoleHit,
  ChainViolation,
  RootFindingDiverged,
  StructureUnverified,
  NotExpanding,
};

/// Stable machine-readable name, e.g. "ChainViolation".
std::string_view code_name(ErrorCode code) noexcept;

/// True for errors caused by bad input rather than by a failed computation.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cantor
