#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudospec/approx.hpp"
#include "pseudospec/sensitivity.hpp"
#include "pseudospec/structures.hpp"

namespace pseudospec {

struct GeneratorInfo {
  std::string family;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> params;

  friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

/// Matrix JSON document: {"n", "entries": [[re, im], ...] row-major,
/// optional "structure", optional "generator"}.
struct MatrixFile {
  Matrix matrix;
  std::optional<StructurePattern> structure;
  std::optional<GeneratorInfo> generator;
};

/// Formats a double with 17 significant digits.
std::string format_real(double value);

std::string matrix_to_json(const MatrixFile& file);
/// Validates shape, finiteness and any declared structure.
MatrixFile matrix_from_json(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

/// FNV-1a over the dimension and the IEEE-754 bits of the entries.
std::uint64_t matrix_hash(const Matrix& A);
std::string hash_hex(std::uint64_t hash);

/// Inverse of StructurePattern::label().
StructurePattern pattern_from_label(const std::string& label);

void write_cloud_csv(std::ostream& out, const PointCloud& cloud, std::uint64_t hash);
std::string cloud_to_csv(const PointCloud& cloud, std::uint64_t hash);

struct CloudFile {
  PointCloud cloud;
  std::uint64_t matrix_hash = 0;
};

CloudFile cloud_from_csv(const std::string& text);
CloudFile read_cloud_file(const std::string& path);

std::string report_to_json(const SensitivityReport& report);
SensitivityReport report_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace pseudospec
