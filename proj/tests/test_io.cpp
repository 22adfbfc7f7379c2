#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "pseudospec/errors.hpp"
#include "pseudospec/generate.hpp"
#include "pseudospec/io.hpp"
#include "test_support.hpp"

namespace pseudospec {
namespace {

using testing::random_complex;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pseudospec::Error thrown";
  return ErrorCode::InvalidInput;
}

TEST(MatrixJson, RoundTripIsExact) {
  MatrixFile file;
  file.matrix = random_complex(4, 10);
  file.matrix(1, 2) = Complex(1e-300, -3.0e300);
  file.structure = StructurePattern::full(4);
  const auto text = matrix_to_json(file);
  const auto back = matrix_from_json(text);
  EXPECT_EQ(back.matrix, file.matrix);
  EXPECT_EQ(back.structure, file.structure);
  EXPECT_EQ(matrix_to_json(back), text);
}

TEST(MatrixJson, GeneratedFilesRoundTripWithMetadata) {
  for (const auto& family : generator_families()) {
    const auto file = generate(family, std::nullopt, 5);
    const auto back = matrix_from_json(matrix_to_json(file));
    EXPECT_EQ(back.matrix, file.matrix) << family;
    EXPECT_EQ(back.structure, file.structure) << family;
    EXPECT_EQ(back.generator, file.generator) << family;
    ASSERT_TRUE(back.structure.has_value());
    EXPECT_TRUE(is_member(back.matrix, *back.structure)) << family;
  }
}

TEST(MatrixJson, LoaderRejectsInvalidDocuments) {
  EXPECT_EQ(code_of([] { matrix_from_json("{"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { matrix_from_json(R"({"n": 2, "entries": [[1,0],[2,0],[3,0]]})"); }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { matrix_from_json(R"({"n": 1, "entries": [[1,0]]})"); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { matrix_from_json(R"({"n": 2, "entries": [[1,0],[2,0],[3],[4,0]]})"); }),
            ErrorCode::InvalidInput);
  // Declared Toeplitz structure that the entries violate.
  EXPECT_EQ(code_of([] {
              matrix_from_json(
                  R"({"n": 2, "entries": [[1,0],[2,0],[3,0],[4,0]], "structure": {"kind": "toeplitz", "support": [-1,0,1], "real": true}})");
            }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] {
              matrix_from_json(
                  R"({"n": 2, "entries": [[1,0],[2,0],[3,0],[4,0]], "structure": {"kind": "hamiltonian", "n_half": 1, "real": true}})");
            }),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { read_matrix_file("/nonexistent/matrix.json"); }), ErrorCode::InvalidInput);
}

TEST(MatrixJson, NumbersUseSeventeenDigits) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_real(M_PI)), M_PI);
}

TEST(Hash, SensitiveToEveryBit) {
  const Matrix A = random_complex(3, 1);
  Matrix B = A;
  B(2, 2) = Complex(B(2, 2).real(), std::nextafter(B(2, 2).imag(), 1e9));
  EXPECT_EQ(matrix_hash(A), matrix_hash(Matrix(A)));
  EXPECT_NE(matrix_hash(A), matrix_hash(B));
  EXPECT_EQ(hash_hex(0x1234abcdULL), "000000001234abcd");
}

TEST(PatternLabel, RoundTrips) {
  for (const auto& S : {StructurePattern::full(5), StructurePattern::toeplitz(5, {-2, 0, 1}, true),
                        StructurePattern::hankel(5, {0, 3}), StructurePattern::hamiltonian(3, true)}) {
    auto parsed = pattern_from_label(S.label());
    if (parsed.dim() != S.dim()) {
      // Labels of band patterns do not carry the order; the cloud header does.
      continue;
    }
    EXPECT_EQ(parsed, S) << S.label();
  }
  EXPECT_EQ(code_of([] { pattern_from_label("banana"); }), ErrorCode::Parse);
}

PointCloud sample_cloud() {
  PointCloud cloud;
  cloud.kind = CloudKind::RandomBaseline;
  cloud.epsilon = 0.125;
  cloud.pattern = StructurePattern::toeplitz(3, {-1, 0, 1}, true);
  cloud.angle_count = 2;
  cloud.samples = 1;
  cloud.seed = 18446744073709551615ULL;
  cloud.points = {{Complex(0.1, -0.2), -1, 0, 0}, {Complex(1.0 / 3.0, 1e-17), -1, 1, 0}, {Complex(-5, 5), -1, 1, 0}};
  return cloud;
}

TEST(CloudCsv, RoundTripIsExact) {
  const auto cloud = sample_cloud();
  const auto text = cloud_to_csv(cloud, 0xdeadbeefULL);
  const auto back = cloud_from_csv(text);
  EXPECT_EQ(back.matrix_hash, 0xdeadbeefULL);
  EXPECT_EQ(back.cloud.points, cloud.points);
  EXPECT_EQ(back.cloud.epsilon, cloud.epsilon);
  EXPECT_EQ(back.cloud.kind, cloud.kind);
  EXPECT_EQ(back.cloud.pattern, cloud.pattern);
  EXPECT_EQ(back.cloud.seed, cloud.seed);
  EXPECT_EQ(back.cloud.angle_count, 2);
  EXPECT_EQ(cloud_to_csv(back.cloud, back.matrix_hash), text);
}

TEST(CloudCsv, RejectsMalformedRows) {
  auto text = cloud_to_csv(sample_cloud(), 1);
  EXPECT_EQ(code_of([&] { cloud_from_csv(text + "1,2,3\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([&] { cloud_from_csv(text + "1,x,0,0,0\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { cloud_from_csv("# pseudospec cloud v1\n"); }), ErrorCode::Parse);
}

TEST(ReportJson, RoundTrip) {
  const auto file = generate("tridiag_toeplitz", 5, 2);
  const auto report = analyze(eig_pairs(file.matrix), *file.structure);
  const auto back = report_from_json(report_to_json(report));
  EXPECT_EQ(back.eigenvalues, report.eigenvalues);
  EXPECT_EQ(back.kappas, report.kappas);
  EXPECT_EQ(back.kappas_structured, report.kappas_structured);
  EXPECT_EQ(back.epsilon, report.epsilon);
  EXPECT_EQ(back.epsilon_structured, report.epsilon_structured);
  EXPECT_EQ(back.pair, report.pair);
  EXPECT_EQ(back.pair_structured, report.pair_structured);
  EXPECT_EQ(back.excluded_structured, report.excluded_structured);
  EXPECT_EQ(back.pattern, report.pattern);
}

TEST(Files, AtomicWriteReplacesContent) {
  const auto dir = std::filesystem::temp_directory_path() / "pseudospec_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.txt").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  EXPECT_EQ(read_text_file(path), "second");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace pseudospec
