#include "pseudospec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 640.0;
constexpr double kMargin = 64.0;
constexpr int kTicks = 5;

const char* const kPalette[] = {"#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-14 ? 0.0 : v);
  return buf;
}

}  // namespace

GridBounds plot_window(const std::vector<const PointCloud*>& clouds,
                       const std::vector<Complex>& eigenvalues, const GridBounds& base) {
  GridBounds w = base;
  const auto grow = [&w](Complex z) {
    w.re_min = std::min(w.re_min, z.real());
    w.re_max = std::max(w.re_max, z.real());
    w.im_min = std::min(w.im_min, z.imag());
    w.im_max = std::max(w.im_max, z.imag());
  };
  for (const auto* cloud : clouds) {
    for (const auto& p : cloud->points) grow(p.z);
  }
  for (const auto& z : eigenvalues) grow(z);
  return w;
}

std::string svg_render(const std::vector<const PointCloud*>& clouds,
                       const std::vector<Complex>& eigenvalues, const GridBounds& window) {
  std::size_t total = eigenvalues.size();
  for (const auto* cloud : clouds) total += cloud->points.size();
  if (total == 0) throw Error(ErrorCode::EmptyInput, "nothing to plot");

  // Pad degenerate windows so a lone point still gets a frame.
  GridBounds w = window;
  if (!(w.re_max > w.re_min)) {
    w.re_min -= 1.0;
    w.re_max += 1.0;
  }
  if (!(w.im_max > w.im_min)) {
    w.im_min -= 1.0;
    w.im_max += 1.0;
  }
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  const auto px = [&](double re) { return kMargin + (re - w.re_min) / (w.re_max - w.re_min) * plot_w; };
  const auto py = [&](double im) { return kHeight - kMargin - (im - w.im_min) / (w.im_max - w.im_min) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<rect x=\"" << fixed(kMargin) << "\" y=\"" << fixed(kMargin) << "\" width=\"" << fixed(plot_w)
      << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double re = w.re_min + (w.re_max - w.re_min) * t / kTicks;
    const double im = w.im_min + (w.im_max - w.im_min) * t / kTicks;
    const double x = px(re);
    const double y = py(im);
    out << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(kHeight - kMargin) << "\" x2=\"" << fixed(x)
        << "\" y2=\"" << fixed(kHeight - kMargin + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(kHeight - kMargin + 18)
        << "\" text-anchor=\"middle\">" << tick_label(re) << "</text>\n";
    out << "<line x1=\"" << fixed(kMargin - 5) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(kMargin)
        << "\" y2=\"" << fixed(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed(kMargin - 8) << "\" y=\"" << fixed(y + 4) << "\" text-anchor=\"end\">"
        << tick_label(im) << "</text>\n";
  }
  out << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"" << fixed(kHeight - 16)
      << "\" text-anchor=\"middle\">Re z</text>\n";
  out << "<text x=\"16\" y=\"" << fixed(kHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed(kHeight / 2) << ")\">Im z</text>\n";
  out << "</g>\n";

  for (std::size_t c = 0; c < clouds.size(); ++c) {
    const char* color = kPalette[c % std::size(kPalette)];
    out << "<g class=\"cloud\" data-kind=\"" << to_string(clouds[c]->kind) << "\" fill=\"" << color << "\">\n";
    for (const auto& p : clouds[c]->points) {
      if (!w.contains(p.z)) continue;
      out << "<circle class=\"pt\" cx=\"" << fixed(px(p.z.real())) << "\" cy=\"" << fixed(py(p.z.imag()))
          << "\" r=\"1.2\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g class=\"eigenvalues\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\">\n";
  for (const auto& z : eigenvalues) {
    if (!w.contains(z)) continue;
    out << "<rect class=\"eig\" x=\"" << fixed(px(z.real()) - 4) << "\" y=\"" << fixed(py(z.imag()) - 4)
        << "\" width=\"8\" height=\"8\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace pseudospec
