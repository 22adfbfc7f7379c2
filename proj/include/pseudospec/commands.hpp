#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pseudospec/io.hpp"

namespace pseudospec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

struct GenerateOptions {
  std::string family;
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::string out;
};

struct AnalyzeOptions {
  std::string matrix_path;
  std::string structure = "auto";
  std::optional<std::string> json_path;
};

struct ApproxOptions {
  std::string matrix_path;
  std::optional<double> epsilon;
  int angles = 1000;
  std::string structure = "auto";
  std::optional<std::string> pair;  // "i,j"
  bool all_eigenvalues = false;
  bool real_eta = false;
  std::optional<int> baseline;
  std::optional<std::string> baseline_out;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<std::string> svg;
};

struct OracleOptions {
  std::string matrix_path;
  std::optional<std::string> bounds;  // "re_min,re_max,im_min,im_max"
  std::string resolution = "200x200";
  std::optional<std::string> eps_list;  // comma separated
  std::optional<std::string> check;
  std::optional<std::string> out;
};

struct TrajectoryOptions {
  std::string matrix_path;
  double eps_max = 0.0;
  int steps = 100;
  std::string structure = "auto";
  std::string out;
};

/// Resolves a --structure flag against a loaded matrix file:
/// auto (declared structure, else full), full, toeplitz, hankel, hamiltonian.
StructurePattern resolve_structure(const std::string& flag, const MatrixFile& file);

/// Default baseline path: "cloud.csv" -> "cloud.baseline.csv".
std::string baseline_path(const std::string& out);

// Each command returns its process exit code and reports errors on `err`.
int run_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int run_approx(const ApproxOptions& opts, std::ostream& out, std::ostream& err);
int run_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);
int run_trajectory(const TrajectoryOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace pseudospec::cli
