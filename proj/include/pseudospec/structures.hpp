#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pseudospec/numkernel.hpp"

namespace pseudospec {

enum class StructureKind { Full, Toeplitz, Hankel, Hamiltonian };

const char* to_string(StructureKind kind);

/// Zero-projection threshold for normalized projections.
inline constexpr double kNormTol = 1e-14;

/**
 * A linear structure class S of n x n matrices.
 *
 * Toeplitz supports are diagonal offsets j - i; Hankel supports are
 * antidiagonal offsets i + j - (n - 1). Both live in [-(n-1), n-1]. The
 * Hamiltonian class is the real-linear subspace {Q : QJ = (QJ)^H}.
 *
 * The `real` flag records that the matrices of interest are real; it selects
 * real Gaussian draws in random_member. Projections of real matrices are
 * real for every kind, so projection itself ignores the flag.
 */
class StructurePattern {
 public:
  static StructurePattern full(int dim);
  static StructurePattern toeplitz(int dim, std::vector<int> offsets, bool real = false);
  static StructurePattern hankel(int dim, std::vector<int> offsets, bool real = false);
  static StructurePattern hamiltonian(int n_half, bool real = false);

  /// Toeplitz pattern whose support is the set of diagonals of A holding an
  /// entry larger than 1e-12 * ||A||_F in modulus.
  static StructurePattern infer_toeplitz(const Matrix& A);
  static StructurePattern infer_hankel(const Matrix& A);

  StructureKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<int>& support() const { return support_; }
  int n_half() const { return dim_ / 2; }
  bool is_real() const { return real_; }
  bool is_full() const { return kind_ == StructureKind::Full; }

  /// Short human-readable label such as "toeplitz{-1,0,1}".
  std::string label() const;

  friend bool operator==(const StructurePattern&, const StructurePattern&) = default;

 private:
  StructurePattern(StructureKind kind, int dim, std::vector<int> support, bool real);

  StructureKind kind_ = StructureKind::Full;
  int dim_ = 0;
  std::vector<int> support_;
  bool real_ = false;
};

/// The fundamental symplectic matrix [[0, I], [-I, 0]] of order 2 * n_half.
Matrix symplectic_j(int n_half);

bool is_member(const Matrix& M, const StructurePattern& S);

/// Frobenius-nearest member of S.
Matrix project(const Matrix& M, const StructurePattern& S);

/// project(M, S) scaled to unit Frobenius norm. Throws ZeroProjection when
/// the projection norm is at most kNormTol.
Matrix normalized_projection(const Matrix& M, const StructurePattern& S);

/// Unit-norm member of S: a seeded Gaussian matrix projected onto S.
Matrix random_member(const StructurePattern& S, std::uint64_t seed);

/// Unit-norm rank-one matrix u v^H with seeded Gaussian u and v.
Matrix random_rank_one(int dim, std::uint64_t seed);

}  // namespace pseudospec
