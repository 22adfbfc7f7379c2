#pragma once

#include <string>
#include <vector>

#include "pseudospec/approx.hpp"
#include "pseudospec/oracle.hpp"

namespace pseudospec {

/// Bounding box of all cloud points and eigenvalues, grown to include `base`.
GridBounds plot_window(const std::vector<const PointCloud*>& clouds,
                       const std::vector<Complex>& eigenvalues, const GridBounds& base);

/// Standalone SVG scatter plot: one fill color per cloud, eigenvalues drawn
/// as red squares, framed axes with tick labels. Points outside the window
/// are skipped. Output bytes depend only on the inputs.
std::string svg_render(const std::vector<const PointCloud*>& clouds,
                       const std::vector<Complex>& eigenvalues, const GridBounds& window);

}  // namespace pseudospec
