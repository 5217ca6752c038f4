#include "cantor/error.hpp"

namespace cantor {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ReciprocalSumTooLarge: return "ReciprocalSumTooLarge";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::InvalidDegrees: return "InvalidDegrees";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadImageDims: return "BadImageDims";
    case ErrorCode::NonPositiveTau: return "NonPositiveTau";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::EmptyMask: return "EmptyMask";
    case ErrorCode::InsufficientScales: return "InsufficientScales";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::ChainViolation: return "ChainViolation";
    case ErrorCode::RootFindingDiverged: return "RootFindingDiverged";
    case ErrorCode::StructureUnverified: return "StructureUnverified";
    case ErrorCode::NotExpanding: return "NotExpanding";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  return static_cast<int>(code) <= static_cast<int>(ErrorCode::InsufficientScales);
}

}  // namespace cantor
