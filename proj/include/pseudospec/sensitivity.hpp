#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pseudospec/numkernel.hpp"
#include "pseudospec/structures.hpp"

namespace pseudospec {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Overlaps |y^H x| at or below this are treated as a defective eigenvalue.
inline constexpr double kOverlapTol = 1e-14;

/// kappa(lambda_i) = 1 / |y_i^H x_i|.
double cond_standard(const Eigensystem& sys, std::size_t i);

/// kappa^S(lambda_i) = ||(y_i x_i^H)|_S||_F / |y_i^H x_i|.
///
/// Hamiltonian patterns first rotate the pair so that Im(y^H J x) = 0; the
/// projection norm depends on that phase and is maximal there. May return 0
/// when y_i x_i^H is orthogonal to S.
double cond_structured(const Eigensystem& sys, std::size_t i, const StructurePattern& S);

/// cond_standard for Full patterns, cond_structured otherwise.
double cond(const Eigensystem& sys, std::size_t i, const StructurePattern& S);

struct WilkinsonPerturbation {
  Matrix base;       // y x^H, unit Frobenius norm
  Matrix projected;  // base|_S normalized; equal to base for Full
  std::size_t eigen_index = 0;
  StructurePattern pattern;
};

WilkinsonPerturbation wilkinson(const Eigensystem& sys, std::size_t i, const StructurePattern& S);

/// Radius of the (structured) Wilkinson disk of parameter t around lambda_i.
double disk_radius(const Eigensystem& sys, std::size_t i, double t, const StructurePattern& S);

struct CoalescenceEstimate {
  double epsilon = 0.0;
  IndexPair pair{0, 1};
  /// Eigenvalues left out of the minimization because kappa^S = 0.
  std::vector<std::size_t> excluded;
};

/// min over i < j of |lambda_i - lambda_j| / (k_i + k_j) with the given
/// condition numbers. Ties within 1e-12 relative keep the lexicographically
/// smallest pair. Entries with k = 0 are excluded.
CoalescenceEstimate coalescence_from_kappas(const std::vector<Complex>& eigenvalues,
                                            const std::vector<double>& kappas);

CoalescenceEstimate coalescence_estimate(const Eigensystem& sys, const StructurePattern& S);

struct SensitivityReport {
  std::vector<Complex> eigenvalues;
  std::vector<double> kappas;
  std::vector<double> kappas_structured;
  double epsilon = 0.0;
  double epsilon_structured = 0.0;
  IndexPair pair{0, 1};
  IndexPair pair_structured{0, 1};
  std::vector<std::size_t> excluded_structured;
  StructurePattern pattern = StructurePattern::full(2);
};

SensitivityReport analyze(const Eigensystem& sys, const StructurePattern& S);

}  // namespace pseudospec
