#include "pseudospec/sensitivity.hpp"

#include <cmath>
#include <limits>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

void require_index(const Eigensystem& sys, std::size_t i) {
  if (i >= sys.size()) {
    throw Error(ErrorCode::InvalidInput, "eigenvalue index " + std::to_string(i) + " out of range");
  }
}

void require_pattern_dim(const Eigensystem& sys, const StructurePattern& S) {
  if (sys.dim() != static_cast<std::size_t>(S.dim())) {
    throw Error(ErrorCode::DimensionMismatch, "pattern dimension does not match eigensystem");
  }
}

double overlap_modulus(const Eigensystem& sys, std::size_t i) {
  require_index(sys, i);
  const double s = std::abs(sys.overlaps[i]);
  if (!(s > kOverlapTol)) {
    throw Error(ErrorCode::VanishingOverlap,
                "y^H x vanishes for eigenvalue " + std::to_string(i));
  }
  return s;
}

// y x^H for the pair used with pattern S (phase-normalized if Hamiltonian).
Matrix outer_product(const Eigensystem& sys, std::size_t i, const StructurePattern& S) {
  Vector x = sys.right(i);
  Vector y = sys.left(i);
  if (S.kind() == StructureKind::Hamiltonian) {
    const Complex w = y.dot(symplectic_j(S.n_half()) * x);
    if (std::abs(w) > 0.0) y *= w / std::abs(w);
  }
  return y * x.adjoint();
}

}  // namespace

double cond_standard(const Eigensystem& sys, std::size_t i) { return 1.0 / overlap_modulus(sys, i); }

double cond_structured(const Eigensystem& sys, std::size_t i, const StructurePattern& S) {
  require_pattern_dim(sys, S);
  const double s = overlap_modulus(sys, i);
  if (S.is_full()) return 1.0 / s;
  return project(outer_product(sys, i, S), S).norm() / s;
}

double cond(const Eigensystem& sys, std::size_t i, const StructurePattern& S) {
  return S.is_full() ? cond_standard(sys, i) : cond_structured(sys, i, S);
}

WilkinsonPerturbation wilkinson(const Eigensystem& sys, std::size_t i, const StructurePattern& S) {
  require_pattern_dim(sys, S);
  require_index(sys, i);
  WilkinsonPerturbation w{outer_product(sys, i, S), Matrix(), i, S};
  w.projected = S.is_full() ? w.base : normalized_projection(w.base, S);
  return w;
}

double disk_radius(const Eigensystem& sys, std::size_t i, double t, const StructurePattern& S) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidInput, "disk parameter must be nonnegative");
  return cond(sys, i, S) * t;
}

CoalescenceEstimate coalescence_from_kappas(const std::vector<Complex>& eigenvalues,
                                            const std::vector<double>& kappas) {
  if (eigenvalues.size() != kappas.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one condition number per eigenvalue expected");
  }
  CoalescenceEstimate est;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < kappas.size(); ++i) {
    if (kappas[i] > 0.0) {
      active.push_back(i);
    } else {
      est.excluded.push_back(i);
    }
  }
  if (active.size() < 2) {
    throw Error(ErrorCode::DegenerateSpectrum, "fewer than two eligible eigenvalues");
  }
  est.epsilon = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t b = a + 1; b < active.size(); ++b) {
      const std::size_t i = active[a];
      const std::size_t j = active[b];
      const double value = std::abs(eigenvalues[i] - eigenvalues[j]) / (kappas[i] + kappas[j]);
      if (value < est.epsilon * (1.0 - 1e-12)) {
        est.epsilon = value;
        est.pair = {i, j};
      }
    }
  }
  return est;
}

CoalescenceEstimate coalescence_estimate(const Eigensystem& sys, const StructurePattern& S) {
  require_pattern_dim(sys, S);
  if (sys.size() < 2) throw Error(ErrorCode::DegenerateSpectrum, "fewer than two eigenvalues");
  std::vector<double> kappas(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) kappas[i] = cond(sys, i, S);
  return coalescence_from_kappas(sys.eigenvalues, kappas);
}

SensitivityReport analyze(const Eigensystem& sys, const StructurePattern& S) {
  require_pattern_dim(sys, S);
  SensitivityReport report;
  report.pattern = S;
  report.eigenvalues = sys.eigenvalues;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    report.kappas.push_back(cond_standard(sys, i));
    report.kappas_structured.push_back(cond(sys, i, S));
  }
  const auto plain = coalescence_from_kappas(sys.eigenvalues, report.kappas);
  const auto structured = coalescence_from_kappas(sys.eigenvalues, report.kappas_structured);
  report.epsilon = plain.epsilon;
  report.pair = plain.pair;
  report.epsilon_structured = structured.epsilon;
  report.pair_structured = structured.pair;
  report.excluded_structured = structured.excluded;
  return report;
}

}  // namespace pseudospec
