#pragma once

#include <stdexcept>
#include <string>

namespace pseudospec {

enum class ErrorCode {
  NonConvergence,
  DefectiveInput,
  DimensionMismatch,
  ZeroProjection,
  VanishingOverlap,
  DegenerateSpectrum,
  ZeroOffdiagonal,
  OutOfBounds,
  EmptyLevelSet,
  EmptyInput,
  UnknownFamily,
  BadParams,
  InvalidInput,
  Parse,
  HashMismatch,
};

const char* to_string(ErrorCode code);

// Numeric failures are distinguished from input validation failures so that
// the CLI can report them with different exit codes.
bool is_numeric_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pseudospec
