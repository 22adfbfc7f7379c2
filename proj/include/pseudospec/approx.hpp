#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pseudospec/numkernel.hpp"
#include "pseudospec/sensitivity.hpp"
#include "pseudospec/structures.hpp"

namespace pseudospec {

enum class CloudKind { WilkinsonSweep, RandomBaseline, Trajectory };

const char* to_string(CloudKind kind);
CloudKind cloud_kind_from_string(const std::string& name);

struct CloudPoint {
  Complex z;
  int source_eigen = -1;  // -1 for random baselines
  int angle_index = 0;
  int sample_index = 0;

  friend bool operator==(const CloudPoint&, const CloudPoint&) = default;
};

struct PointCloud {
  CloudKind kind = CloudKind::WilkinsonSweep;
  double epsilon = 0.0;
  StructurePattern pattern = StructurePattern::full(2);
  int angle_count = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> swept;  // eigenvalue indices with a sweep
  std::vector<CloudPoint> points;

  std::vector<Complex> positions() const;
  std::vector<Complex> positions_from(int source_eigen) const;
};

struct SweepConfig {
  std::optional<double> epsilon;  // defaults to the coalescence estimate
  int angle_count = 1000;
  StructurePattern pattern = StructurePattern::full(2);
  std::optional<IndexPair> pair_override;
  bool all_eigenvalues = false;
  bool real_eta = false;  // eta in {+1, -1} only
};

/// Angles theta_k = 2 pi k / K for k = 0..K-1, or {0, pi} with real_eta.
std::vector<double> sweep_angles(const SweepConfig& cfg);

/// epsilon * e^{i theta} * W, the perturbation applied for one sweep sample.
Matrix sweep_perturbation(const Matrix& direction, double epsilon, double theta);

/// Spectra of A + e^{i theta_k} eps W_j for the swept eigenvalues j, where
/// W_j is the (normalized, projected) Wilkinson perturbation of lambda_j.
PointCloud sweep_wilkinson(const Matrix& A, const Eigensystem& sys, const SweepConfig& cfg);

/// Unit-norm random perturbation number `sample` of a baseline with `seed`:
/// random_rank_one for Full, random_member otherwise.
Matrix baseline_direction(const StructurePattern& S, std::uint64_t seed, int sample);

/// Spectra of A + eps e^{i theta_k} E_s for `samples` random directions E_s.
PointCloud random_cloud(const Matrix& A, const SweepConfig& cfg, int samples, std::uint64_t seed);

/// First-order paths lambda_i + eps (y_i^H E x_i)/(y_i^H x_i) over eps_grid.
/// sample_index 0 uses E, sample_index 1 uses E|_S normalized (structured S).
PointCloud first_order_trajectories(const Eigensystem& sys, const Matrix& E,
                                    const std::vector<double>& eps_grid,
                                    const StructurePattern& S);

enum class BoundDirection {
  AllOnes,    // ones/n, or its normalized projection onto S
  Wilkinson,  // projected Wilkinson perturbation of the extremal eigenvalue
};

/// Unit-norm perturbation direction used by the lower-bound heuristics.
Matrix all_ones_direction(int dim, const StructurePattern& S);

/// max Re over the spectrum of A + eps E for an admissible unit-norm E, hence
/// a lower bound for the (structured) eps-pseudospectral abscissa.
double abscissa_lower_bound(const Matrix& A, const Eigensystem& sys, double epsilon,
                            const StructurePattern& S,
                            BoundDirection direction = BoundDirection::AllOnes);

/// As abscissa_lower_bound with max |z| in place of max Re z.
double radius_lower_bound(const Matrix& A, const Eigensystem& sys, double epsilon,
                          const StructurePattern& S,
                          BoundDirection direction = BoundDirection::AllOnes);

/// Smallest distance between a point sourced from eigenvalue a and one from b.
double min_intercloud_distance(const PointCloud& cloud, int a, int b);

/// max over p in `from` of the distance from p to the nearest point of `to`.
double directed_hausdorff(const std::vector<Complex>& from, const std::vector<Complex>& to);

}  // namespace pseudospec
