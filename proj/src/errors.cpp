#include "pseudospec/errors.hpp"

namespace pseudospec {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DefectiveInput: return "DefectiveInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroProjection: return "ZeroProjection";
    case ErrorCode::VanishingOverlap: return "VanishingOverlap";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::ZeroOffdiagonal: return "ZeroOffdiagonal";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::HashMismatch: return "HashMismatch";
  }
  return "Unknown";
}

bool is_numeric_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergence:
    case ErrorCode::DefectiveInput:
    case ErrorCode::ZeroProjection:
    case ErrorCode::VanishingOverlap:
    case ErrorCode::DegenerateSpectrum:
    case ErrorCode::EmptyLevelSet:
      return true;
    default:
      return false;
  }
}

}  // namespace pseudospec
