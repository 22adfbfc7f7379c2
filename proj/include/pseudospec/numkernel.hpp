#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace pseudospec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative residual required of every computed eigen-triple.
inline constexpr double kEigResidualTol = 1e-10;
/// Eigenvalues closer than this (relative to the Frobenius norm) are treated
/// as a defective input.
inline constexpr double kGapTol = 1e-8;

/**
 * Matched eigen-triples (lambda_i, x_i, y_i) of a square matrix.
 *
 * Column i of `rights` and `lefts` holds unit right and left eigenvectors of
 * eigenvalues[i]. The left vector's phase is chosen so that overlaps[i] =
 * y_i^H x_i is real and positive (Hamiltonian normalization relaxes this to
 * |overlaps[i]| only, see hamiltonian_phase_normalize).
 */
struct Eigensystem {
  std::vector<Complex> eigenvalues;
  Matrix rights;
  Matrix lefts;
  std::vector<Complex> overlaps;
  double min_gap = 0.0;

  std::size_t size() const { return eigenvalues.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(rights.rows()); }
  Vector right(std::size_t i) const { return rights.col(static_cast<Eigen::Index>(i)); }
  Vector left(std::size_t i) const { return lefts.col(static_cast<Eigen::Index>(i)); }
};

/// Throws InvalidInput unless A is square, at least 2x2, and finite.
void require_valid_matrix(const Matrix& A);

/// Sorts a spectrum by real part, then by imaginary part among eigenvalues
/// whose real parts agree to within `tol`.
void sort_spectrum(std::vector<Complex>& values, double tol);

/// Sorted eigenvalues only. No distinctness precondition, so this is the
/// solver used on perturbed matrices that may be close to defective.
std::vector<Complex> eigenvalues(const Matrix& A);

/// Full eigensystem with left vectors matched to right vectors.
/// Throws DefectiveInput when two eigenvalues are within kGapTol * ||A||_F.
Eigensystem eig_pairs(const Matrix& A);

/// Rotates each left vector so that y_i^H J x_i is real and nonnegative,
/// with J the symplectic matrix of half-dimension n_half.
Eigensystem hamiltonian_phase_normalize(Eigensystem sys, int n_half);

/// Smallest singular value of A - zI.
double sigma_min(const Matrix& A, Complex z);

/// Tridiagonal Toeplitz matrix with constant sub-, main and superdiagonal.
Matrix tridiag_toeplitz(int n, Complex sub, Complex diag, Complex super);

/// Closed-form eigensystem of tridiag_toeplitz(n, sub, diag, super).
/// Intended as an independent reference for eig_pairs.
Eigensystem tridiag_toeplitz_reference(int n, Complex sub, Complex diag, Complex super);

}  // namespace pseudospec
