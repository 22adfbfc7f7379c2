#include "pseudospec/structures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

void require_dim(const Matrix& M, const StructurePattern& S) {
  if (M.rows() != S.dim() || M.cols() != S.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix dimension " + std::to_string(M.rows()) +
                                                  " does not match pattern dimension " +
                                                  std::to_string(S.dim()));
  }
}

std::vector<int> normalize_support(int dim, std::vector<int> offsets) {
  if (offsets.empty()) throw Error(ErrorCode::BadParams, "structure support is empty");
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  if (offsets.front() < -(dim - 1) || offsets.back() > dim - 1) {
    throw Error(ErrorCode::BadParams, "structure support offset out of range");
  }
  return offsets;
}

// Averages M along the lines i + sign*j = const of the supported offsets and
// zeroes the remaining lines. sign = -1 gives diagonals (offset j - i),
// sign = +1 antidiagonals (offset i + j - (n - 1)).
Matrix average_lines(const Matrix& M, const std::vector<int>& support, bool anti) {
  const int n = static_cast<int>(M.rows());
  Matrix out = Matrix::Zero(n, n);
  for (int offset : support) {
    Complex sum = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      const int j = anti ? offset + (n - 1) - i : i + offset;
      if (j < 0 || j >= n) continue;
      sum += M(i, j);
      ++count;
    }
    const Complex mean = sum / static_cast<double>(count);
    for (int i = 0; i < n; ++i) {
      const int j = anti ? offset + (n - 1) - i : i + offset;
      if (j < 0 || j >= n) continue;
      out(i, j) = mean;
    }
  }
  return out;
}

std::vector<int> infer_lines(const Matrix& A, bool anti) {
  require_valid_matrix(A);
  const int n = static_cast<int>(A.rows());
  const double threshold = 1e-12 * A.norm();
  std::vector<int> support;
  for (int offset = -(n - 1); offset <= n - 1; ++offset) {
    bool nonzero = false;
    for (int i = 0; i < n && !nonzero; ++i) {
      const int j = anti ? offset + (n - 1) - i : i + offset;
      if (j >= 0 && j < n && std::abs(A(i, j)) > threshold) nonzero = true;
    }
    if (nonzero) support.push_back(offset);
  }
  if (support.empty()) throw Error(ErrorCode::BadParams, "cannot infer structure of a zero matrix");
  return support;
}

Matrix gaussian_matrix(int dim, bool real, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix G(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = real ? 0.0 : normal(rng);
      G(i, j) = Complex(re, im);
    }
  }
  return G;
}

}  // namespace

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Full: return "full";
    case StructureKind::Toeplitz: return "toeplitz";
    case StructureKind::Hankel: return "hankel";
    case StructureKind::Hamiltonian: return "hamiltonian";
  }
  return "unknown";
}

StructurePattern::StructurePattern(StructureKind kind, int dim, std::vector<int> support, bool real)
    : kind_(kind), dim_(dim), support_(std::move(support)), real_(real) {}

StructurePattern StructurePattern::full(int dim) {
  if (dim < 2) throw Error(ErrorCode::BadParams, "dimension must be at least 2");
  return StructurePattern(StructureKind::Full, dim, {}, false);
}

StructurePattern StructurePattern::toeplitz(int dim, std::vector<int> offsets, bool real) {
  if (dim < 2) throw Error(ErrorCode::BadParams, "dimension must be at least 2");
  return StructurePattern(StructureKind::Toeplitz, dim, normalize_support(dim, std::move(offsets)),
                          real);
}

StructurePattern StructurePattern::hankel(int dim, std::vector<int> offsets, bool real) {
  if (dim < 2) throw Error(ErrorCode::BadParams, "dimension must be at least 2");
  return StructurePattern(StructureKind::Hankel, dim, normalize_support(dim, std::move(offsets)),
                          real);
}

StructurePattern StructurePattern::hamiltonian(int n_half, bool real) {
  if (n_half < 1) throw Error(ErrorCode::BadParams, "Hamiltonian half-dimension must be positive");
  return StructurePattern(StructureKind::Hamiltonian, 2 * n_half, {}, real);
}

StructurePattern StructurePattern::infer_toeplitz(const Matrix& A) {
  const bool real = A.imag().isZero(0.0);
  return toeplitz(static_cast<int>(A.rows()), infer_lines(A, false), real);
}

StructurePattern StructurePattern::infer_hankel(const Matrix& A) {
  const bool real = A.imag().isZero(0.0);
  return hankel(static_cast<int>(A.rows()), infer_lines(A, true), real);
}

std::string StructurePattern::label() const {
  std::ostringstream out;
  out << to_string(kind_);
  if (kind_ == StructureKind::Toeplitz || kind_ == StructureKind::Hankel) {
    out << '{';
    for (std::size_t k = 0; k < support_.size(); ++k) {
      if (k) out << ',';
      out << support_[k];
    }
    out << '}';
  } else if (kind_ == StructureKind::Hamiltonian) {
    out << '(' << n_half() << ')';
  }
  if (real_) out << "[real]";
  return out.str();
}

Matrix symplectic_j(int n_half) {
  if (n_half < 1) throw Error(ErrorCode::BadParams, "Hamiltonian half-dimension must be positive");
  const Eigen::Index h = n_half;
  Matrix J = Matrix::Zero(2 * h, 2 * h);
  J.topRightCorner(h, h).setIdentity();
  J.bottomLeftCorner(h, h) = -Matrix::Identity(h, h);
  return J;
}

bool is_member(const Matrix& M, const StructurePattern& S) {
  require_dim(M, S);
  const double tol = 1e-12 * M.norm();
  if (S.kind() == StructureKind::Hamiltonian) {
    const Matrix QJ = M * symplectic_j(S.n_half());
    return (QJ - QJ.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }
  return (M - project(M, S)).norm() <= tol;
}

Matrix project(const Matrix& M, const StructurePattern& S) {
  require_dim(M, S);
  switch (S.kind()) {
    case StructureKind::Full:
      return M;
    case StructureKind::Toeplitz:
      return average_lines(M, S.support(), false);
    case StructureKind::Hankel:
      return average_lines(M, S.support(), true);
    case StructureKind::Hamiltonian: {
      const Matrix J = symplectic_j(S.n_half());
      return 0.5 * (M + J * M.adjoint() * J);
    }
  }
  return M;
}

Matrix normalized_projection(const Matrix& M, const StructurePattern& S) {
  Matrix P = project(M, S);
  const double norm = P.norm();
  if (!(norm > kNormTol)) {
    throw Error(ErrorCode::ZeroProjection, "projection onto " + S.label() + " vanishes");
  }
  return P / norm;
}

Matrix random_member(const StructurePattern& S, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return normalized_projection(gaussian_matrix(S.dim(), S.is_real(), rng), S);
}

Matrix random_rank_one(int dim, std::uint64_t seed) {
  if (dim < 2) throw Error(ErrorCode::BadParams, "dimension must be at least 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vector u(dim), v(dim);
  for (int i = 0; i < dim; ++i) u(i) = Complex(normal(rng), normal(rng));
  for (int i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
  u.normalize();
  v.normalize();
  return u * v.adjoint();
}

}  // namespace pseudospec
