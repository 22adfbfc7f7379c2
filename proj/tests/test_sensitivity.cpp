#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pseudospec/errors.hpp"
#include "pseudospec/sensitivity.hpp"
#include "test_support.hpp"

namespace pseudospec {
namespace {

using testing::random_complex;

Eigensystem diag_system(const std::vector<double>& values) {
  Matrix A = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
  return eig_pairs(A);
}

/// kappa^H from |y^H J x| in closed form.
double hamiltonian_kappa_oracle(const Eigensystem& sys, std::size_t i, int n_half) {
  const Matrix J = symplectic_j(n_half);
  const double w = std::abs(sys.left(i).dot(J * sys.right(i)));
  return std::sqrt((1.0 + w * w) / 2.0) / std::abs(sys.left(i).dot(sys.right(i)));
}

TEST(Condition, TwoByTwoNonNormal) {
  Matrix A(2, 2);
  A << 0, 1, 0, 1;
  const auto sys = eig_pairs(A);
  EXPECT_NEAR(cond_standard(sys, 0), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(cond_standard(sys, 1), std::sqrt(2.0), 1e-14);
}

TEST(Condition, NormalMatricesHaveUnitCondition) {
  Matrix H = random_complex(5, 3);
  H = (H + H.adjoint()).eval();
  const auto sys = eig_pairs(H);
  for (std::size_t i = 0; i < sys.size(); ++i) EXPECT_NEAR(cond_standard(sys, i), 1.0, 1e-12);
}

TEST(Condition, FullPatternMatchesStandard) {
  const auto sys = eig_pairs(random_complex(6, 8));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    EXPECT_NEAR(cond_structured(sys, i, StructurePattern::full(6)), cond_standard(sys, i), 1e-12);
    EXPECT_LE(cond_structured(sys, i, StructurePattern::toeplitz(6, {-1, 0, 1})), cond_standard(sys, i) * (1 + 1e-14));
  }
}

TEST(Condition, ToeplitzMatchesBasisOracle) {
  const Matrix T = tridiag_toeplitz(7, Complex(2.0, 0.5), Complex(0.1), Complex(0.4, -0.2));
  const auto sys = eig_pairs(T);
  const std::vector<int> support{-1, 0, 1};
  const auto S = StructurePattern::toeplitz(7, support);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Matrix M = sys.left(i) * sys.right(i).adjoint();
    const double oracle = testing::line_basis_projection(M, support, false).norm() / std::abs(sys.left(i).dot(sys.right(i)));
    EXPECT_NEAR(cond_structured(sys, i, S), oracle, 1e-12 * oracle);
  }
}

TEST(Condition, HamiltonianClosedForm) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto S = StructurePattern::hamiltonian(3);
    const Matrix A = project(random_complex(6, seed), S);
    const auto sys = eig_pairs(A);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const double oracle = hamiltonian_kappa_oracle(sys, i, 3);
      EXPECT_NEAR(cond_structured(sys, i, S), oracle, 1e-10 * oracle);
    }
  }
}

TEST(Condition, StructuredConditionIsMaximalOverClass) {
  std::vector<StructurePattern> patterns{StructurePattern::toeplitz(6, {-2, 0, 1}), StructurePattern::hankel(6, {-1, 0, 3}),
                                         StructurePattern::hamiltonian(3)};
  const auto sys = eig_pairs(random_complex(6, 21));
  for (const auto& S : patterns) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const double kappa = cond_structured(sys, i, S);
      const Complex overlap = sys.left(i).dot(sys.right(i));
      double best = 0.0;
      for (std::uint64_t k = 0; k < 1000; ++k) {
        const Matrix E = random_member(S, 7000 + k);
        const double v = std::abs(sys.left(i).dot(E * sys.right(i)) / overlap);
        EXPECT_LE(v, kappa * (1 + 1e-12)) << S.label();
        best = std::max(best, v);
      }
      // The bound is attained by the Wilkinson direction.
      const auto W = wilkinson(sys, i, S);
      EXPECT_NEAR(std::abs(sys.left(i).dot(W.projected * sys.right(i)) / overlap), kappa, 1e-12 * kappa);
      EXPECT_GT(best, 0.3 * kappa);
    }
  }
}

TEST(Wilkinson, UnitNormMembersAndHamiltonianRank) {
  const auto S = StructurePattern::hamiltonian(3);
  const auto sys = eig_pairs(project(random_complex(6, 5), S));
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto W = wilkinson(sys, i, S);
    EXPECT_NEAR(W.base.norm(), 1.0, 1e-14);
    EXPECT_NEAR(W.projected.norm(), 1.0, 1e-14);
    EXPECT_TRUE(is_member(W.projected, S));
    EXPECT_LE(testing::numerical_rank(W.projected, 1e-10), 2);
  }
  const auto full = wilkinson(sys, 0, StructurePattern::full(6));
  EXPECT_EQ(full.base, full.projected);
}

TEST(Wilkinson, FirstOrderShiftLaw) {
  const Matrix A = random_complex(5, 12);
  const auto sys = eig_pairs(A);
  const auto S = StructurePattern::toeplitz(5, {-1, 0, 1});
  const double t = 1e-6;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto W = wilkinson(sys, i, S);
    const Complex lambda = sys.eigenvalues[i];
    const Complex moved = testing::nearest_eigenvalue(A + t * W.projected, lambda);
    const double kappa = cond_structured(sys, i, S);
    EXPECT_NEAR(std::abs(moved - lambda), t * kappa, 1e-9);
    EXPECT_NEAR(disk_radius(sys, i, t, S), t * kappa, 1e-20);
  }
}

TEST(Coalescence, DiagonalExample) {
  const auto sys = diag_system({0.0, 1.0, 10.0});
  const auto est = coalescence_estimate(sys, StructurePattern::full(3));
  EXPECT_NEAR(est.epsilon, 0.5, 1e-15);
  EXPECT_EQ(est.pair, (IndexPair{0, 1}));
}

TEST(Coalescence, TieKeepsLexicographicallySmallestPair) {
  const auto sys = diag_system({0.0, 1.0, 2.0});
  const auto est = coalescence_estimate(sys, StructurePattern::full(3));
  EXPECT_EQ(est.pair, (IndexPair{0, 1}));
  const auto swapped = coalescence_from_kappas({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0 - 1e-14});
  EXPECT_EQ(swapped.pair, (IndexPair{0, 1}));
}

TEST(Coalescence, ZeroConditionEntriesAreExcluded) {
  const auto est = coalescence_from_kappas({0.0, 0.1, 3.0, 4.0}, {1.0, 0.0, 1.0, 1.0});
  EXPECT_EQ(est.excluded, (std::vector<std::size_t>{1}));
  EXPECT_EQ(est.pair, (IndexPair{2, 3}));
  EXPECT_NEAR(est.epsilon, 0.5, 1e-15);
}

TEST(Coalescence, MatchesBruteForceOnRandomMatrices) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto sys = eig_pairs(random_complex(6, seed));
    std::vector<double> kappas;
    for (std::size_t i = 0; i < sys.size(); ++i) kappas.push_back(cond_standard(sys, i));
    const auto oracle = testing::brute_force_coalescence(sys.eigenvalues, kappas);
    const auto est = coalescence_estimate(sys, StructurePattern::full(6));
    EXPECT_NEAR(est.epsilon, oracle.first, 1e-14 * oracle.first);
    EXPECT_EQ(est.pair, oracle.second);
  }
}

TEST(Coalescence, ScalesLinearlyWithMatrix) {
  const Matrix A = random_complex(5, 4);
  const auto base = coalescence_estimate(eig_pairs(A), StructurePattern::full(5));
  for (double c : {1e-3, 0.5, 7.0, 1e4}) {
    const auto scaled = coalescence_estimate(eig_pairs(c * A), StructurePattern::full(5));
    EXPECT_NEAR(scaled.epsilon, c * base.epsilon, 1e-10 * c * base.epsilon);
    EXPECT_EQ(scaled.pair, base.pair);
  }
}

TEST(Analyze, MatchesReferenceTridiagonalTable) {
  // Tridiagonal Toeplitz matrix rebuilt from a reference spectrum: the
  // center and spread fix diag and sub*super, and kappa(lambda_1) = 115.3
  // fixes sub/super.
  const double diag = (-0.4988 + 2.1283) / 2;
  const double geo = (2.1283 + 0.4988) / (4 * std::cos(3.14159265358979323846 / 6));
  const auto S = StructurePattern::toeplitz(5, {-1, 0, 1}, true);
  double lo = 1, hi = 100;
  for (int it = 0; it < 200; ++it) {
    const double r = 0.5 * (lo + hi);
    const auto sys = eig_pairs(tridiag_toeplitz(5, geo * r, diag, geo / r));
    (cond_standard(sys, 0) < 115.3 ? lo : hi) = r;
  }
  const auto report = analyze(eig_pairs(tridiag_toeplitz(5, geo * lo, diag, geo / lo)), S);
  const std::vector<double> lambda{-0.4988, 0.0564, 0.8147, 1.5731, 2.1283};
  const std::vector<double> kappa{1.153e2, 3.269e2, 4.243e2, 3.269e2, 1.153e2};
  const std::vector<double> kappa_t{2.625, 1.559, 0.4472, 1.559, 2.625};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(report.eigenvalues[i].real(), lambda[i], 1e-4);
    EXPECT_NEAR(report.kappas[i], kappa[i], 1e-3 * kappa[i]);
    EXPECT_NEAR(report.kappas_structured[i], kappa_t[i], 1e-3 * kappa_t[i]);
  }
  EXPECT_EQ(report.pair, (IndexPair{1, 2}));
  EXPECT_EQ(report.pair_structured, (IndexPair{0, 1}));
  EXPECT_NEAR(std::log10(report.epsilon_structured), -0.8, 0.1);
  EXPECT_NEAR(std::log10(report.epsilon), -3.0, 0.05);
}

TEST(Analyze, ReportIsConsistent) {
  const Matrix T = tridiag_toeplitz(5, 3.0, 0.5, 0.4);
  const auto S = StructurePattern::toeplitz(5, {-1, 0, 1}, true);
  const auto sys = eig_pairs(T);
  const auto report = analyze(sys, S);
  ASSERT_EQ(report.kappas.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_LE(report.kappas_structured[i], report.kappas[i]);
    EXPECT_NEAR(report.kappas[i], report.kappas[4 - i], 1e-10 * report.kappas[i]);
  }
  EXPECT_GE(report.epsilon_structured, report.epsilon);
  EXPECT_EQ(report.pattern, S);
}

}  // namespace
}  // namespace pseudospec
