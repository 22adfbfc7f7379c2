#include "pseudospec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pseudospec/errors.hpp"
#include "pseudospec/sensitivity.hpp"

namespace pseudospec {

double GridField::cell_diameter() const { return std::hypot(cell_width(), cell_height()); }

Complex GridField::center(int i_re, int i_im) const {
  return {bounds.re_min + (i_re + 0.5) * cell_width(), bounds.im_min + (i_im + 0.5) * cell_height()};
}

std::vector<bool> GridField::level_set(double epsilon) const {
  std::vector<bool> inside(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) inside[k] = values[k] <= epsilon;
  return inside;
}

GridField grid_field(const Matrix& A, const GridBounds& bounds, const GridResolution& resolution) {
  require_valid_matrix(A);
  if (!(bounds.re_max > bounds.re_min) || !(bounds.im_max > bounds.im_min)) {
    throw Error(ErrorCode::BadParams, "grid bounds are degenerate");
  }
  if (resolution.n_re < 2 || resolution.n_im < 2) {
    throw Error(ErrorCode::BadParams, "grid resolution must be at least 2x2");
  }
  GridField field{bounds, resolution, {}};
  field.values.resize(static_cast<std::size_t>(resolution.n_re) * static_cast<std::size_t>(resolution.n_im));
  for (int i = 0; i < resolution.n_re; ++i) {
    for (int j = 0; j < resolution.n_im; ++j) {
      field.values[static_cast<std::size_t>(i) * static_cast<std::size_t>(resolution.n_im) +
                   static_cast<std::size_t>(j)] = sigma_min(A, field.center(i, j));
    }
  }
  return field;
}

GridBounds default_bounds(const Eigensystem& sys, double epsilon) {
  double kappa_max = 1.0;
  for (std::size_t i = 0; i < sys.size(); ++i) kappa_max = std::max(kappa_max, cond_standard(sys, i));
  GridBounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& z : sys.eigenvalues) {
    b.re_min = std::min(b.re_min, z.real());
    b.re_max = std::max(b.re_max, z.real());
    b.im_min = std::min(b.im_min, z.imag());
    b.im_max = std::max(b.im_max, z.imag());
  }
  const double pad = std::max(2.0 * epsilon * kappa_max, 1e-12);
  b.re_min -= pad;
  b.re_max += pad;
  b.im_min -= pad;
  b.im_max += pad;
  return b;
}

bool contains(const GridField& field, Complex z, double epsilon) {
  if (!field.bounds.contains(z)) throw Error(ErrorCode::OutOfBounds, "point outside grid window");
  const auto nearest = [](double v, double lo, double step, int count) {
    return std::clamp(static_cast<int>(std::floor((v - lo) / step)), 0, count - 1);
  };
  const int i = nearest(z.real(), field.bounds.re_min, field.cell_width(), field.resolution.n_re);
  const int j = nearest(z.imag(), field.bounds.im_min, field.cell_height(), field.resolution.n_im);
  return field.at(i, j) <= epsilon;
}

InclusionReport cloud_inclusion_check(const PointCloud& cloud, const Matrix& A, double slack) {
  if (!(slack >= 0.0)) throw Error(ErrorCode::BadParams, "slack must be nonnegative");
  InclusionReport report;
  const double limit = cloud.epsilon * (1.0 + slack);
  for (std::size_t k = 0; k < cloud.points.size(); ++k) {
    const double s = sigma_min(A, cloud.points[k].z);
    ++report.total;
    if (s <= limit) {
      ++report.passed;
    } else {
      ++report.failed;
    }
    const double ratio = cloud.epsilon > 0.0 ? s / cloud.epsilon : s;
    if (!report.worst_index || ratio > report.worst_ratio) {
      report.worst_index = k;
      report.worst_ratio = ratio;
    }
  }
  return report;
}

AbscissaEstimate abscissa_grid(const GridField& field, double epsilon) {
  AbscissaEstimate est;
  est.value = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (int i = 0; i < field.resolution.n_re; ++i) {
    for (int j = 0; j < field.resolution.n_im; ++j) {
      if (field.at(i, j) > epsilon) continue;
      any = true;
      est.value = std::max(est.value, field.center(i, j).real());
      if (i == field.resolution.n_re - 1) est.touches_boundary = true;
    }
  }
  if (!any) throw Error(ErrorCode::EmptyLevelSet, "no grid cell lies in the level set");
  est.uncertainty = 0.5 * field.cell_width();
  return est;
}

}  // namespace pseudospec
