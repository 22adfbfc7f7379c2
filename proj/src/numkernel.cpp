#include "pseudospec/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Tolerance used to group real parts when ordering a spectrum.
double ordering_tol(const Matrix& A) { return 1e-10 * std::max(A.norm(), 1.0); }

std::vector<std::size_t> spectrum_order(const std::vector<Complex>& values, double tol) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a].real() < values[b].real();
  });
  // Within runs of (numerically) equal real parts, order by imaginary part.
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start + 1;
    while (stop < order.size() &&
           values[order[stop]].real() - values[order[stop - 1]].real() <= tol) {
      ++stop;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(stop),
                     [&](std::size_t a, std::size_t b) {
                       return values[a].imag() < values[b].imag();
                     });
    start = stop;
  }
  return order;
}

double min_pairwise_gap(const std::vector<Complex>& values) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      gap = std::min(gap, std::abs(values[i] - values[j]));
    }
  }
  return gap;
}

Matrix symplectic(int n_half) {
  const Eigen::Index h = n_half;
  Matrix J = Matrix::Zero(2 * h, 2 * h);
  J.topRightCorner(h, h).setIdentity();
  J.bottomLeftCorner(h, h) = -Matrix::Identity(h, h);
  return J;
}

}  // namespace

void require_valid_matrix(const Matrix& A) {
  if (A.rows() != A.cols()) {
    throw Error(ErrorCode::InvalidInput, "matrix is not square");
  }
  if (A.rows() < 2) {
    throw Error(ErrorCode::InvalidInput, "matrix dimension must be at least 2");
  }
  if (!A.allFinite()) {
    throw Error(ErrorCode::InvalidInput, "matrix has non-finite entries");
  }
}

void sort_spectrum(std::vector<Complex>& values, double tol) {
  const auto order = spectrum_order(values, tol);
  std::vector<Complex> sorted;
  sorted.reserve(values.size());
  for (auto k : order) sorted.push_back(values[k]);
  values = std::move(sorted);
}

std::vector<Complex> eigenvalues(const Matrix& A) {
  require_valid_matrix(A);
  Eigen::ComplexEigenSolver<Matrix> solver(A, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "complex Schur iteration failed");
  }
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  sort_spectrum(values, ordering_tol(A));
  return values;
}

Eigensystem eig_pairs(const Matrix& A) {
  require_valid_matrix(A);
  const double norm = A.norm();
  const auto n = static_cast<std::size_t>(A.rows());

  Eigen::ComplexEigenSolver<Matrix> right_solver(A);
  Eigen::ComplexEigenSolver<Matrix> left_solver(A.adjoint());
  if (right_solver.info() != Eigen::Success || left_solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "complex Schur iteration failed");
  }

  std::vector<Complex> raw(right_solver.eigenvalues().data(),
                           right_solver.eigenvalues().data() + n);
  const auto order = spectrum_order(raw, ordering_tol(A));

  Eigensystem sys;
  sys.eigenvalues.reserve(n);
  for (auto k : order) sys.eigenvalues.push_back(raw[k]);
  sys.min_gap = min_pairwise_gap(sys.eigenvalues);
  if (!(sys.min_gap > kGapTol * norm)) {
    throw Error(ErrorCode::DefectiveInput,
                "eigenvalues are not numerically distinct (min gap " +
                    std::to_string(sys.min_gap) + ")");
  }

  sys.rights.resize(A.rows(), A.rows());
  sys.lefts.resize(A.rows(), A.rows());
  sys.overlaps.resize(n);

  // A^H has eigenvalues conj(lambda); pair each lambda_i with the nearest one.
  const auto& mu = left_solver.eigenvalues();
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex target = std::conj(sys.eigenvalues[i]);
    std::size_t best = n;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::abs(mu[static_cast<Eigen::Index>(j)] - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == n || taken[best] || best_dist > 0.5 * sys.min_gap) {
      throw Error(ErrorCode::NonConvergence, "could not match left to right eigenvectors");
    }
    taken[best] = true;

    const auto ii = static_cast<Eigen::Index>(i);
    Vector x = right_solver.eigenvectors().col(static_cast<Eigen::Index>(order[i]));
    Vector y = left_solver.eigenvectors().col(static_cast<Eigen::Index>(best));
    x.normalize();
    y.normalize();
    const Complex s = y.dot(x);  // y^H x
    if (std::abs(s) > 0.0) y *= s / std::abs(s);
    sys.rights.col(ii) = x;
    sys.lefts.col(ii) = y;
    sys.overlaps[i] = y.dot(x);

    const Complex lambda = sys.eigenvalues[i];
    const double right_res = (A * x - lambda * x).norm();
    const double left_res = (A.adjoint() * y - std::conj(lambda) * y).norm();
    if (right_res > kEigResidualTol * norm || left_res > kEigResidualTol * norm) {
      throw Error(ErrorCode::NonConvergence, "eigenvector residual above tolerance");
    }
  }
  return sys;
}

Eigensystem hamiltonian_phase_normalize(Eigensystem sys, int n_half) {
  if (n_half < 1 || sys.dim() != 2 * static_cast<std::size_t>(n_half)) {
    throw Error(ErrorCode::DimensionMismatch,
                "Hamiltonian normalization needs an even dimension 2*n_half");
  }
  const Matrix J = symplectic(n_half);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const Complex w = sys.lefts.col(ii).dot(J * sys.rights.col(ii));
    if (w.imag() == 0.0 && w.real() >= 0.0) continue;
    if (std::abs(w) == 0.0) continue;
    // (c y)^H J x = conj(c) w; choose c = w/|w| so the product is |w|.
    sys.lefts.col(ii) *= w / std::abs(w);
    sys.overlaps[i] = sys.lefts.col(ii).dot(sys.rights.col(ii));
  }
  return sys;
}

double sigma_min(const Matrix& A, Complex z) {
  if (A.rows() != A.cols()) {
    throw Error(ErrorCode::InvalidInput, "matrix is not square");
  }
  Matrix shifted = A;
  shifted.diagonal().array() -= z;
  Eigen::JacobiSVD<Matrix> svd(shifted);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorCode::NonConvergence, "SVD failed");
  }
  return svd.singularValues().minCoeff();
}

Matrix tridiag_toeplitz(int n, Complex sub, Complex diag, Complex super) {
  if (n < 2) throw Error(ErrorCode::BadParams, "order must be at least 2");
  Matrix T = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = diag;
    if (i + 1 < n) {
      T(i + 1, i) = sub;
      T(i, i + 1) = super;
    }
  }
  return T;
}

Eigensystem tridiag_toeplitz_reference(int n, Complex sub, Complex diag, Complex super) {
  if (n < 2) throw Error(ErrorCode::BadParams, "order must be at least 2");
  if (sub == 0.0 || super == 0.0) {
    throw Error(ErrorCode::ZeroOffdiagonal, "sub- and superdiagonal must be nonzero");
  }
  // x_k(j) = r^j sin(j k pi/(n+1)) with r^2 = sub/super; the left vector uses
  // conj(1/r) in place of r, which makes y^H x real and positive.
  const Complex r = std::sqrt(sub / super);
  const Complex s = super * r;
  const Complex r_left = std::conj(1.0 / r);

  struct Triple {
    Complex lambda;
    Vector x;
    Vector y;
  };
  std::vector<Triple> triples;
  for (int k = 1; k <= n; ++k) {
    const double theta = k * kPi / (n + 1);
    Triple t{diag + 2.0 * s * std::cos(theta), Vector(n), Vector(n)};
    for (int j = 1; j <= n; ++j) {
      const double sn = std::sin(j * theta);
      t.x(j - 1) = std::pow(r, j) * sn;
      t.y(j - 1) = std::pow(r_left, j) * sn;
    }
    t.x.normalize();
    t.y.normalize();
    triples.push_back(std::move(t));
  }

  std::vector<Complex> values;
  for (const auto& t : triples) values.push_back(t.lambda);
  const auto order = spectrum_order(values, 1e-10 * std::max(1.0, std::abs(diag) + 2.0 * std::abs(s)));

  Eigensystem sys;
  sys.rights.resize(n, n);
  sys.lefts.resize(n, n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& t = triples[order[i]];
    sys.eigenvalues.push_back(t.lambda);
    sys.rights.col(static_cast<Eigen::Index>(i)) = t.x;
    sys.lefts.col(static_cast<Eigen::Index>(i)) = t.y;
    sys.overlaps.push_back(t.y.dot(t.x));
  }
  sys.min_gap = min_pairwise_gap(sys.eigenvalues);
  return sys;
}

}  // namespace pseudospec
