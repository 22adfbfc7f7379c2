#include "pseudospec/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::BadParams, "epsilon must be positive and finite");
  }
}

void require_compatible(const Matrix& A, const StructurePattern& S) {
  require_valid_matrix(A);
  if (A.rows() != S.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "pattern dimension does not match matrix");
  }
}

void append_spectrum(PointCloud& cloud, const Matrix& B, int source, int angle, int sample) {
  for (const Complex& z : eigenvalues(B)) {
    cloud.points.push_back(CloudPoint{z, source, angle, sample});
  }
}

using BoxPoint = boost::geometry::model::point<double, 2, boost::geometry::cs::cartesian>;

// Packed R-tree over planar points for nearest-neighbour queries.
class NearestIndex {
 public:
  explicit NearestIndex(const std::vector<Complex>& points) {
    std::vector<BoxPoint> boxed;
    boxed.reserve(points.size());
    for (const auto& p : points) boxed.emplace_back(p.real(), p.imag());
    tree_ = Tree(boxed.begin(), boxed.end());
  }

  double nearest_distance(Complex q) const {
    BoxPoint hit(0.0, 0.0);
    tree_.query(boost::geometry::index::nearest(BoxPoint(q.real(), q.imag()), 1), &hit);
    return std::hypot(hit.get<0>() - q.real(), hit.get<1>() - q.imag());
  }

 private:
  using Tree = boost::geometry::index::rtree<BoxPoint, boost::geometry::index::rstar<16>>;
  Tree tree_;
};

Complex extremal_shift_phase(const Eigensystem& sys, std::size_t i, const Matrix& W, Complex target) {
  const Vector x = sys.right(i);
  const Vector y = sys.left(i);
  const Complex c = y.dot(W * x) / y.dot(x);
  if (std::abs(c) == 0.0) return 1.0;
  // eta * c points along `target`.
  return target * std::conj(c) / std::abs(c);
}

Matrix bound_perturbation(const Matrix& A, const Eigensystem& sys, double epsilon,
                          const StructurePattern& S, BoundDirection direction, bool radius) {
  require_compatible(A, S);
  require_epsilon(epsilon);
  const int n = static_cast<int>(A.rows());
  if (direction == BoundDirection::AllOnes) return epsilon * all_ones_direction(n, S);

  std::size_t best = 0;
  for (std::size_t i = 1; i < sys.size(); ++i) {
    const auto& l = sys.eigenvalues;
    const bool better = radius ? std::abs(l[i]) > std::abs(l[best]) : l[i].real() > l[best].real();
    if (better) best = i;
  }
  const Matrix W = wilkinson(sys, best, S).projected;
  Complex target = 1.0;
  if (radius && std::abs(sys.eigenvalues[best]) > 0.0) {
    target = sys.eigenvalues[best] / std::abs(sys.eigenvalues[best]);
  }
  return epsilon * extremal_shift_phase(sys, best, W, target) * W;
}

}  // namespace

const char* to_string(CloudKind kind) {
  switch (kind) {
    case CloudKind::WilkinsonSweep: return "wilkinson_sweep";
    case CloudKind::RandomBaseline: return "random_baseline";
    case CloudKind::Trajectory: return "trajectory";
  }
  return "unknown";
}

CloudKind cloud_kind_from_string(const std::string& name) {
  if (name == "wilkinson_sweep") return CloudKind::WilkinsonSweep;
  if (name == "random_baseline") return CloudKind::RandomBaseline;
  if (name == "trajectory") return CloudKind::Trajectory;
  throw Error(ErrorCode::Parse, "unknown cloud kind '" + name + "'");
}

std::vector<Complex> PointCloud::positions() const {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.z);
  return out;
}

std::vector<Complex> PointCloud::positions_from(int source_eigen) const {
  std::vector<Complex> out;
  for (const auto& p : points) {
    if (p.source_eigen == source_eigen) out.push_back(p.z);
  }
  return out;
}

std::vector<double> sweep_angles(const SweepConfig& cfg) {
  if (cfg.real_eta) return {0.0, kPi};
  if (cfg.angle_count < 1) throw Error(ErrorCode::BadParams, "angle count must be at least 1");
  std::vector<double> angles(static_cast<std::size_t>(cfg.angle_count));
  for (int k = 0; k < cfg.angle_count; ++k) angles[static_cast<std::size_t>(k)] = 2.0 * kPi * k / cfg.angle_count;
  return angles;
}

Matrix sweep_perturbation(const Matrix& direction, double epsilon, double theta) {
  return (epsilon * std::polar(1.0, theta)) * direction;
}

PointCloud sweep_wilkinson(const Matrix& A, const Eigensystem& sys, const SweepConfig& cfg) {
  require_compatible(A, cfg.pattern);
  if (sys.dim() != static_cast<std::size_t>(A.rows())) {
    throw Error(ErrorCode::DimensionMismatch, "eigensystem does not belong to the matrix");
  }
  const auto angles = sweep_angles(cfg);

  PointCloud cloud;
  cloud.kind = CloudKind::WilkinsonSweep;
  cloud.pattern = cfg.pattern;
  cloud.angle_count = static_cast<int>(angles.size());

  std::optional<CoalescenceEstimate> estimate;
  if (!cfg.epsilon || (!cfg.pair_override && !cfg.all_eigenvalues)) {
    estimate = coalescence_estimate(sys, cfg.pattern);
  }
  cloud.epsilon = cfg.epsilon ? *cfg.epsilon : estimate->epsilon;
  require_epsilon(cloud.epsilon);

  if (cfg.all_eigenvalues) {
    for (std::size_t i = 0; i < sys.size(); ++i) cloud.swept.push_back(i);
  } else {
    const IndexPair pair = cfg.pair_override ? *cfg.pair_override : estimate->pair;
    if (pair.first == pair.second || pair.first >= sys.size() || pair.second >= sys.size()) {
      throw Error(ErrorCode::BadParams, "invalid eigenvalue pair");
    }
    cloud.swept = {std::min(pair.first, pair.second), std::max(pair.first, pair.second)};
  }

  const auto n = static_cast<std::size_t>(A.rows());
  cloud.points.reserve(cloud.swept.size() * angles.size() * n);
  for (auto i : cloud.swept) {
    const Matrix W = wilkinson(sys, i, cfg.pattern).projected;
    for (std::size_t k = 0; k < angles.size(); ++k) {
      append_spectrum(cloud, A + sweep_perturbation(W, cloud.epsilon, angles[k]),
                      static_cast<int>(i), static_cast<int>(k), 0);
    }
  }
  return cloud;
}

Matrix baseline_direction(const StructurePattern& S, std::uint64_t seed, int sample) {
  // Per-sample seeds are drawn from one master stream so that every sample is
  // reproducible on its own.
  std::mt19937_64 master(seed);
  master.discard(static_cast<unsigned long long>(sample));
  const std::uint64_t sub = master();
  return S.is_full() ? random_rank_one(S.dim(), sub) : random_member(S, sub);
}

PointCloud random_cloud(const Matrix& A, const SweepConfig& cfg, int samples, std::uint64_t seed) {
  require_compatible(A, cfg.pattern);
  if (samples < 1) throw Error(ErrorCode::BadParams, "sample count must be at least 1");
  if (!cfg.epsilon) throw Error(ErrorCode::BadParams, "random baseline needs an explicit epsilon");
  require_epsilon(*cfg.epsilon);
  const auto angles = sweep_angles(cfg);

  PointCloud cloud;
  cloud.kind = CloudKind::RandomBaseline;
  cloud.epsilon = *cfg.epsilon;
  cloud.pattern = cfg.pattern;
  cloud.angle_count = static_cast<int>(angles.size());
  cloud.samples = samples;
  cloud.seed = seed;

  std::vector<Matrix> directions;
  directions.reserve(static_cast<std::size_t>(samples));
  std::mt19937_64 master(seed);
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t sub = master();
    directions.push_back(cfg.pattern.is_full() ? random_rank_one(cfg.pattern.dim(), sub)
                                               : random_member(cfg.pattern, sub));
  }

  cloud.points.reserve(static_cast<std::size_t>(A.rows()) * angles.size() * directions.size());
  for (std::size_t k = 0; k < angles.size(); ++k) {
    for (int s = 0; s < samples; ++s) {
      append_spectrum(cloud, A + sweep_perturbation(directions[static_cast<std::size_t>(s)], cloud.epsilon, angles[k]),
                      -1, static_cast<int>(k), s);
    }
  }
  return cloud;
}

PointCloud first_order_trajectories(const Eigensystem& sys, const Matrix& E,
                                    const std::vector<double>& eps_grid,
                                    const StructurePattern& S) {
  if (E.rows() != static_cast<Eigen::Index>(sys.dim()) || E.cols() != E.rows() ||
      S.dim() != E.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "perturbation does not match eigensystem");
  }
  if (std::abs(E.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidInput, "trajectory perturbation must have unit Frobenius norm");
  }
  std::vector<Matrix> directions{E};
  if (!S.is_full()) directions.push_back(normalized_projection(E, S));

  PointCloud cloud;
  cloud.kind = CloudKind::Trajectory;
  cloud.epsilon = eps_grid.empty() ? 0.0 : *std::max_element(eps_grid.begin(), eps_grid.end());
  cloud.pattern = S;
  cloud.angle_count = static_cast<int>(eps_grid.size());
  cloud.samples = static_cast<int>(directions.size());

  for (std::size_t i = 0; i < sys.size(); ++i) {
    cloud.swept.push_back(i);
    const Vector x = sys.right(i);
    const Vector y = sys.left(i);
    const Complex overlap = y.dot(x);
    if (!(std::abs(overlap) > kOverlapTol)) {
      throw Error(ErrorCode::VanishingOverlap, "y^H x vanishes for eigenvalue " + std::to_string(i));
    }
    std::vector<Complex> speeds;
    for (const auto& D : directions) speeds.push_back(y.dot(D * x) / overlap);
    for (std::size_t g = 0; g < eps_grid.size(); ++g) {
      for (std::size_t d = 0; d < speeds.size(); ++d) {
        cloud.points.push_back(CloudPoint{sys.eigenvalues[i] + eps_grid[g] * speeds[d],
                                          static_cast<int>(i), static_cast<int>(g),
                                          static_cast<int>(d)});
      }
    }
  }
  return cloud;
}

Matrix all_ones_direction(int dim, const StructurePattern& S) {
  if (S.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "pattern dimension mismatch");
  const Matrix ones = Matrix::Constant(dim, dim, Complex(1.0 / dim, 0.0));
  return S.is_full() ? ones : normalized_projection(ones, S);
}

double abscissa_lower_bound(const Matrix& A, const Eigensystem& sys, double epsilon,
                            const StructurePattern& S, BoundDirection direction) {
  const auto spectrum = eigenvalues(A + bound_perturbation(A, sys, epsilon, S, direction, false));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : spectrum) best = std::max(best, z.real());
  return best;
}

double radius_lower_bound(const Matrix& A, const Eigensystem& sys, double epsilon,
                          const StructurePattern& S, BoundDirection direction) {
  const auto spectrum = eigenvalues(A + bound_perturbation(A, sys, epsilon, S, direction, true));
  double best = 0.0;
  for (const auto& z : spectrum) best = std::max(best, std::abs(z));
  return best;
}

double min_intercloud_distance(const PointCloud& cloud, int a, int b) {
  const auto from = cloud.positions_from(a);
  const auto to = cloud.positions_from(b);
  if (from.empty() || to.empty()) throw Error(ErrorCode::EmptyInput, "sub-cloud is empty");
  const NearestIndex grid(to);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : from) best = std::min(best, grid.nearest_distance(p));
  return best;
}

double directed_hausdorff(const std::vector<Complex>& from, const std::vector<Complex>& to) {
  if (from.empty() || to.empty()) throw Error(ErrorCode::EmptyInput, "point set is empty");
  const NearestIndex grid(to);
  double worst = 0.0;
  for (const auto& p : from) worst = std::max(worst, grid.nearest_distance(p));
  return worst;
}

}  // namespace pseudospec
