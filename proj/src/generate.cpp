#include "pseudospec/generate.hpp"

#include <random>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

constexpr int kMaxOrder = 64;

int resolve_order(std::optional<int> n, int fallback) {
  const int order = n.value_or(fallback);
  if (order < 2 || order > kMaxOrder) {
    throw Error(ErrorCode::BadParams, "order must lie in [2, " + std::to_string(kMaxOrder) + "]");
  }
  return order;
}

Matrix banded_toeplitz(int n, const std::vector<std::pair<int, Complex>>& diagonals) {
  Matrix T = Matrix::Zero(n, n);
  for (const auto& [offset, value] : diagonals) {
    for (int i = 0; i < n; ++i) {
      const int j = i + offset;
      if (j >= 0 && j < n) T(i, j) = value;
    }
  }
  return T;
}

}  // namespace

std::vector<std::string> generator_families() {
  return {"tridiag_toeplitz", "pentadiag_toeplitz", "hamiltonian_random"};
}

MatrixFile generate(const std::string& family, std::optional<int> n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> wide(0.0, 5.0);

  MatrixFile file;
  GeneratorInfo info{family, seed, {}};

  if (family == "tridiag_toeplitz") {
    const int order = resolve_order(n, 5);
    const double diag = unit(rng);
    const double super = unit(rng);
    const double sub = wide(rng);
    file.matrix = tridiag_toeplitz(order, sub, diag, super);
    file.structure = StructurePattern::toeplitz(order, {-1, 0, 1}, true);
    info.params = {{"n", order}, {"diag", diag}, {"super", super}, {"sub", sub}};
  } else if (family == "pentadiag_toeplitz") {
    const int order = resolve_order(n, 10);
    if (order < 3) throw Error(ErrorCode::BadParams, "pentadiagonal family needs order >= 3");
    std::vector<std::pair<int, Complex>> diagonals;
    for (int offset : {0, 1, 2, -1, -2}) {
      auto& dist = offset >= 0 ? unit : wide;
      const double re = dist(rng);
      const double im = dist(rng);
      diagonals.emplace_back(offset, Complex(re, im));
      const std::string tag = "d" + std::to_string(offset);
      info.params.emplace_back(tag + "_re", re);
      info.params.emplace_back(tag + "_im", im);
    }
    info.params.insert(info.params.begin(), {"n", order});
    file.matrix = banded_toeplitz(order, diagonals);
    file.structure = StructurePattern::toeplitz(order, {-2, -1, 0, 1, 2}, false);
  } else if (family == "hamiltonian_random") {
    const int order = resolve_order(n, 8);
    if (order % 2 != 0) throw Error(ErrorCode::BadParams, "Hamiltonian family needs an even order");
    Matrix M(order, order);
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) M(i, j) = unit(rng);
    }
    const auto S = StructurePattern::hamiltonian(order / 2, true);
    file.matrix = project(M, S);
    file.structure = S;
    info.params = {{"n", order}};
  } else {
    throw Error(ErrorCode::UnknownFamily, "unknown matrix family '" + family + "'");
  }
  file.generator = info;
  return file;
}

}  // namespace pseudospec
