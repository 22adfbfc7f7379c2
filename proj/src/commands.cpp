#include "pseudospec/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "pseudospec/approx.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/generate.hpp"
#include "pseudospec/oracle.hpp"
#include "pseudospec/sensitivity.hpp"
#include "pseudospec/svg.hpp"

namespace pseudospec::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numeric_failure(e.code()) ? kExitNumeric : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadParams, std::string("bad number in ") + what + ": '" + part + "'");
    }
  }
  if (expected != 0 && values.size() != expected) {
    throw Error(ErrorCode::BadParams, std::string(what) + " expects " + std::to_string(expected) + " values");
  }
  if (values.empty()) throw Error(ErrorCode::BadParams, std::string(what) + " is empty");
  return values;
}

IndexPair parse_pair(const std::string& text) {
  const auto v = parse_list(text, 2, "--pair");
  if (v[0] < 0 || v[1] < 0 || v[0] != static_cast<double>(static_cast<long>(v[0])) ||
      v[1] != static_cast<double>(static_cast<long>(v[1]))) {
    throw Error(ErrorCode::BadParams, "--pair expects two nonnegative integers");
  }
  return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])};
}

GridResolution parse_resolution(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw Error(ErrorCode::BadParams, "--res expects NxM");
  try {
    GridResolution r{std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
    if (r.n_re < 2 || r.n_im < 2) throw Error(ErrorCode::BadParams, "--res must be at least 2x2");
    return r;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadParams, "--res expects NxM");
  }
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}

std::string complex_text(Complex z) {
  // Parts that round to zero print as +0 rather than -0.
  const auto clean = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

}  // namespace

StructurePattern resolve_structure(const std::string& flag, const MatrixFile& file) {
  const Matrix& A = file.matrix;
  const int n = static_cast<int>(A.rows());
  const bool real = A.imag().isZero(0.0);
  const auto declared = [&](StructureKind kind) {
    return file.structure && file.structure->kind() == kind;
  };
  if (flag == "auto") return file.structure ? *file.structure : StructurePattern::full(n);
  if (flag == "full") return StructurePattern::full(n);
  if (flag == "toeplitz") {
    return declared(StructureKind::Toeplitz) ? *file.structure : StructurePattern::infer_toeplitz(A);
  }
  if (flag == "hankel") {
    return declared(StructureKind::Hankel) ? *file.structure : StructurePattern::infer_hankel(A);
  }
  if (flag == "hamiltonian") {
    if (declared(StructureKind::Hamiltonian)) return *file.structure;
    if (n % 2 != 0) throw Error(ErrorCode::BadParams, "Hamiltonian structure needs an even order");
    return StructurePattern::hamiltonian(n / 2, real);
  }
  throw Error(ErrorCode::BadParams, "unknown structure '" + flag + "'");
}

std::string baseline_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + ".baseline";
  return out.substr(0, dot) + ".baseline" + out.substr(dot);
}

int run_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MatrixFile file = generate(opts.family, opts.n, opts.seed);
    write_file_atomic(opts.out, matrix_to_json(file));
    out << "wrote " << opts.family << " matrix of order " << file.matrix.rows() << " (seed " << opts.seed
        << ") to " << opts.out << '\n';
    return kExitOk;
  });
}

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MatrixFile file = read_matrix_file(opts.matrix_path);
    const StructurePattern S = resolve_structure(opts.structure, file);
    const Eigensystem sys = eig_pairs(file.matrix);
    const SensitivityReport report = analyze(sys, S);

    char line[160];
    out << "structure: " << S.label() << '\n';
    std::snprintf(line, sizeof line, "%4s  %-30s  %-12s  %-12s\n", "i", "lambda_i", "kappa", "kappa_S");
    out << line;
    for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
      std::snprintf(line, sizeof line, "%4zu  %-30s  %-12s  %-12s\n", i, complex_text(report.eigenvalues[i]).c_str(),
                    sci(report.kappas[i]).c_str(), sci(report.kappas_structured[i]).c_str());
      out << line;
    }
    out << "epsilon (unstructured): " << sci(report.epsilon) << "  pair {" << report.pair.first << ", "
        << report.pair.second << "}\n";
    out << "epsilon (structured):   " << sci(report.epsilon_structured) << "  pair {"
        << report.pair_structured.first << ", " << report.pair_structured.second << "}\n";
    for (auto i : report.excluded_structured) {
      out << "warning: eigenvalue " << i << " has zero structured condition number and was excluded\n";
    }
    if (opts.json_path) write_file_atomic(*opts.json_path, report_to_json(report));
    return kExitOk;
  });
}

int run_approx(const ApproxOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MatrixFile file = read_matrix_file(opts.matrix_path);
    const Matrix& A = file.matrix;
    SweepConfig cfg;
    cfg.pattern = resolve_structure(opts.structure, file);
    cfg.epsilon = opts.epsilon;
    cfg.angle_count = opts.angles;
    cfg.all_eigenvalues = opts.all_eigenvalues;
    cfg.real_eta = opts.real_eta;
    if (opts.pair) cfg.pair_override = parse_pair(*opts.pair);

    const Eigensystem sys = eig_pairs(A);
    const PointCloud sweep = sweep_wilkinson(A, sys, cfg);
    const std::uint64_t hash = matrix_hash(A);
    write_file_atomic(opts.out, cloud_to_csv(sweep, hash));
    out << "sweep: " << sweep.points.size() << " points, epsilon " << sci(sweep.epsilon) << ", pattern "
        << sweep.pattern.label() << " -> " << opts.out << '\n';

    std::optional<PointCloud> baseline;
    if (opts.baseline) {
      SweepConfig base_cfg = cfg;
      base_cfg.epsilon = sweep.epsilon;
      baseline = random_cloud(A, base_cfg, *opts.baseline, opts.seed);
      const std::string path = opts.baseline_out ? *opts.baseline_out : baseline_path(opts.out);
      write_file_atomic(path, cloud_to_csv(*baseline, hash));
      out << "baseline: " << baseline->points.size() << " points -> " << path << '\n';
    }

    if (opts.svg) {
      std::vector<const PointCloud*> clouds;
      if (baseline) clouds.push_back(&*baseline);
      clouds.push_back(&sweep);
      const GridBounds window = plot_window(clouds, sys.eigenvalues, default_bounds(sys, sweep.epsilon));
      write_file_atomic(*opts.svg, svg_render(clouds, sys.eigenvalues, window));
      out << "plot -> " << *opts.svg << '\n';
    }
    return kExitOk;
  });
}

int run_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MatrixFile file = read_matrix_file(opts.matrix_path);
    const Matrix& A = file.matrix;
    const GridResolution res = parse_resolution(opts.resolution);
    std::vector<double> eps_list;
    if (opts.eps_list) eps_list = parse_list(*opts.eps_list, 0, "--eps-list");
    for (double e : eps_list) {
      if (!(e > 0.0)) throw Error(ErrorCode::BadParams, "--eps-list values must be positive");
    }

    std::optional<CloudFile> cloud;
    if (opts.check) {
      cloud = read_cloud_file(*opts.check);
      if (cloud->matrix_hash != matrix_hash(A)) {
        throw Error(ErrorCode::HashMismatch, "cloud " + *opts.check + " was not computed from this matrix");
      }
    }

    GridBounds bounds;
    if (opts.bounds) {
      const auto b = parse_list(*opts.bounds, 4, "--bounds");
      bounds = {b[0], b[1], b[2], b[3]};
    } else {
      const Eigensystem sys = eig_pairs(A);
      double reference = 0.0;
      for (double e : eps_list) reference = std::max(reference, e);
      if (cloud) reference = std::max(reference, cloud->cloud.epsilon);
      if (reference == 0.0) reference = coalescence_estimate(sys, StructurePattern::full(static_cast<int>(A.rows()))).epsilon;
      bounds = default_bounds(sys, reference);
    }

    const GridField field = grid_field(A, bounds, res);
    out << "grid " << res.n_re << "x" << res.n_im << " on [" << format_real(bounds.re_min) << ", "
        << format_real(bounds.re_max) << "] x [" << format_real(bounds.im_min) << ", "
        << format_real(bounds.im_max) << "]\n";
    if (opts.out) {
      std::ostringstream csv;
      csv << "# matrix_hash=" << hash_hex(matrix_hash(A)) << '\n';
      csv << "re,im,sigma_min\n";
      for (int i = 0; i < res.n_re; ++i) {
        for (int j = 0; j < res.n_im; ++j) {
          const Complex z = field.center(i, j);
          csv << format_real(z.real()) << ',' << format_real(z.imag()) << ',' << format_real(field.at(i, j)) << '\n';
        }
      }
      write_file_atomic(*opts.out, csv.str());
      out << "grid values -> " << *opts.out << '\n';
    }
    if (cloud) {
      const InclusionReport report = cloud_inclusion_check(cloud->cloud, A, 1e-8);
      if (report.all_passed()) {
        out << "inclusion: pass 100% (" << report.passed << "/" << report.total << ")\n";
      } else {
        const auto& worst = cloud->cloud.points[*report.worst_index];
        out << "inclusion: FAIL " << report.failed << " of " << report.total << " points, worst sigma/epsilon "
            << format_real(report.worst_ratio) << " at " << complex_text(worst.z) << '\n';
        return kExitNumeric;
      }
    }
    for (double e : eps_list) {
      const auto cells = field.level_set(e);
      const auto count = static_cast<std::size_t>(std::count(cells.begin(), cells.end(), true));
      const AbscissaEstimate abscissa = abscissa_grid(field, e);
      out << "epsilon " << sci(e) << ": " << count << " cells, abscissa " << format_real(abscissa.value)
          << " +/- " << format_real(abscissa.uncertainty) << (abscissa.touches_boundary ? " (window edge)" : "")
          << '\n';
    }
    return kExitOk;
  });
}

int run_trajectory(const TrajectoryOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(opts.eps_max > 0.0)) throw Error(ErrorCode::BadParams, "--eps-max must be positive");
    if (opts.steps < 2) throw Error(ErrorCode::BadParams, "--steps must be at least 2");
    const MatrixFile file = read_matrix_file(opts.matrix_path);
    const Matrix& A = file.matrix;
    const StructurePattern S = resolve_structure(opts.structure, file);
    const Eigensystem sys = eig_pairs(A);
    std::vector<double> grid(static_cast<std::size_t>(opts.steps));
    for (int k = 0; k < opts.steps; ++k) grid[static_cast<std::size_t>(k)] = opts.eps_max * k / (opts.steps - 1);
    const int n = static_cast<int>(A.rows());
    const PointCloud cloud =
        first_order_trajectories(sys, all_ones_direction(n, StructurePattern::full(n)), grid, S);
    write_file_atomic(opts.out, cloud_to_csv(cloud, matrix_hash(A)));
    out << "trajectories: " << cloud.points.size() << " points, pattern " << S.label() << " -> " << opts.out
        << '\n';
    return kExitOk;
  });
}

}  // namespace pseudospec::cli
