#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pseudospec/approx.hpp"
#include "pseudospec/numkernel.hpp"

namespace pseudospec {

struct GridBounds {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;

  bool contains(Complex z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
};

struct GridResolution {
  int n_re = 200;
  int n_im = 200;
};

/// sigma_min(A - zI) sampled at the cell centers of a rectangular window.
struct GridField {
  GridBounds bounds;
  GridResolution resolution;
  std::vector<double> values;  // index i_re * n_im + i_im

  double cell_width() const { return (bounds.re_max - bounds.re_min) / resolution.n_re; }
  double cell_height() const { return (bounds.im_max - bounds.im_min) / resolution.n_im; }
  double cell_diameter() const;
  Complex center(int i_re, int i_im) const;
  double at(int i_re, int i_im) const {
    return values[static_cast<std::size_t>(i_re) * static_cast<std::size_t>(resolution.n_im) +
                  static_cast<std::size_t>(i_im)];
  }
  /// Cells with sigma_min <= epsilon.
  std::vector<bool> level_set(double epsilon) const;
};

GridField grid_field(const Matrix& A, const GridBounds& bounds, const GridResolution& resolution);

/// Bounding box of the spectrum padded by 2 * epsilon * max_i kappa(lambda_i).
GridBounds default_bounds(const Eigensystem& sys, double epsilon);

/// Nearest-cell test of sigma_min(A - zI) <= epsilon. Throws OutOfBounds.
bool contains(const GridField& field, Complex z, double epsilon);

struct InclusionReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::size_t> worst_index;  // point with the largest sigma/epsilon
  double worst_ratio = 0.0;

  bool all_passed() const { return failed == 0; }
};

/// Checks sigma_min(A - zI) <= epsilon (1 + slack) for every cloud point.
InclusionReport cloud_inclusion_check(const PointCloud& cloud, const Matrix& A, double slack);

struct AbscissaEstimate {
  double value = 0.0;        // max Re over level-set cell centers
  double uncertainty = 0.0;  // half a cell width
  bool touches_boundary = false;
};

/// Throws EmptyLevelSet when no cell satisfies sigma_min <= epsilon.
AbscissaEstimate abscissa_grid(const GridField& field, double epsilon);

}  // namespace pseudospec
