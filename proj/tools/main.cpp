#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pseudospec/commands.hpp"

using namespace pseudospec::cli;

int main(int argc, char** argv) {
  CLI::App app{"Approximate standard and structured pseudospectra via Wilkinson perturbations"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a seeded example matrix");
  generate->add_option("--family", gen.family, "tridiag_toeplitz | pentadiag_toeplitz | hamiltonian_random")
      ->required();
  generate->add_option("--n", gen.n, "Matrix order");
  generate->add_option("--seed", gen.seed, "64-bit seed");
  generate->add_option("--out", gen.out, "Output matrix JSON")->required();

  AnalyzeOptions ana;
  auto* analyze = app.add_subcommand("analyze", "Condition numbers and coalescence estimates");
  analyze->add_option("matrix", ana.matrix_path, "Matrix JSON")->required();
  analyze->add_option("--structure", ana.structure, "auto | full | toeplitz | hankel | hamiltonian");
  analyze->add_option("--json", ana.json_path, "Write the report as JSON");

  ApproxOptions apx;
  auto* approx = app.add_subcommand("approx", "Wilkinson sweep (and optional random baseline)");
  approx->add_option("matrix", apx.matrix_path, "Matrix JSON")->required();
  approx->add_option("--epsilon", apx.epsilon, "Perturbation size (default: coalescence estimate)");
  approx->add_option("--angles", apx.angles, "Number of angles K");
  approx->add_option("--structure", apx.structure, "auto | full | toeplitz | hankel | hamiltonian");
  approx->add_option("--pair", apx.pair, "Eigenvalue pair i,j to sweep");
  approx->add_flag("--all", apx.all_eigenvalues, "Sweep every eigenvalue");
  approx->add_flag("--real-eta", apx.real_eta, "Restrict eta to +1 and -1");
  approx->add_option("--baseline", apx.baseline, "Random perturbations per angle");
  approx->add_option("--baseline-out", apx.baseline_out, "Baseline cloud CSV");
  approx->add_option("--seed", apx.seed, "64-bit seed for the baseline");
  approx->add_option("--out", apx.out, "Output cloud CSV")->required();
  approx->add_option("--svg", apx.svg, "Scatter plot output");

  OracleOptions ora;
  auto* oracle = app.add_subcommand("oracle", "sigma_min grid, level sets and inclusion checks");
  oracle->add_option("matrix", ora.matrix_path, "Matrix JSON")->required();
  oracle->add_option("--bounds", ora.bounds, "re_min,re_max,im_min,im_max");
  oracle->add_option("--res", ora.resolution, "Grid resolution NxM");
  oracle->add_option("--eps-list", ora.eps_list, "Comma-separated epsilon levels");
  oracle->add_option("--check", ora.check, "Cloud CSV to verify");
  oracle->add_option("--out", ora.out, "Grid values CSV");

  TrajectoryOptions tra;
  auto* trajectory = app.add_subcommand("trajectory", "First-order eigenvalue paths under ones/n");
  trajectory->add_option("matrix", tra.matrix_path, "Matrix JSON")->required();
  trajectory->add_option("--eps-max", tra.eps_max, "Largest epsilon")->required();
  trajectory->add_option("--steps", tra.steps, "Number of epsilon values");
  trajectory->add_option("--structure", tra.structure, "auto | full | toeplitz | hankel | hamiltonian");
  trajectory->add_option("--out", tra.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (*generate) return run_generate(gen, std::cout, std::cerr);
  if (*analyze) return run_analyze(ana, std::cout, std::cerr);
  if (*approx) return run_approx(apx, std::cout, std::cerr);
  if (*oracle) return run_oracle(ora, std::cout, std::cerr);
  return run_trajectory(tra, std::cout, std::cerr);
}
