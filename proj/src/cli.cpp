#include "flatwell/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "flatwell/errors.hpp"
#include "flatwell/potential.hpp"
#include "flatwell/report.hpp"
#include "flatwell/trial_energy.hpp"

namespace flatwell::cli {

namespace {

struct Options {
  std::string n = "2";
  std::string n_list = "2,4,6,8";
  double mu = 1.0;
  double a = 1.0;
  double hbar = 1.0;
  double mass = 1.0;
  std::string method = "gamma";
  std::string format = "csv";
  std::string source = "trial";
  std::size_t points = 201;
  double beta_from = 2.0;
  double beta_to = 20.0;
  double step = 1.0;
  double tol = 1e-8;
};

void run_estimate(const Options& o, std::ostream& out) {
  const WellSpec well = WellSpec::parse(o.n);
  if (well.is_square_well()) throw DomainError("estimate needs a power-law exponent, not the square well");
  const Potential potential = make_power_potential(o.mu, o.a, *well.exponent);
  const ReducedProblem rp = reduce(potential, PhysicalConstants(o.hbar, o.mass));
  write_estimate(out, estimate_energy(rp, parse_method(o.method)), well, parse_format(o.format));
}

void run_table(const Options& o, std::ostream& out) {
  const std::vector<WellSpec> wells = parse_well_list(o.n_list);
  const std::vector<TableRow> rows = compute_table(wells, o.tol);
  write_table(out, rows, parse_format(o.format));
}

void run_sweep(const Options& o, std::ostream& out) {
  write_sweep(out, sweep_beta(o.beta_from, o.beta_to, o.step), parse_format(o.format));
}

void run_wavefunction(const Options& o, std::ostream& out) {
  const WellSpec well = WellSpec::parse(o.n);
  const WavefunctionSource source =
      o.source == "reference" ? WavefunctionSource::reference : WavefunctionSource::trial;
  write_wavefunction(out, wavefunction_report(well, o.mu, source, o.points));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ground-state energies of power-law wells V(x) = mu |x/a|^N", "flatwell"};
  app.require_subcommand(1);

  const auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* estimate = app.add_subcommand("estimate", "Matched trial-function energy for one well");
  estimate->add_option("--n", o.n, "Potential exponent N >= 2")->required();
  estimate->add_option("--mu", o.mu, "Potential strength mu");
  estimate->add_option("--a", o.a, "Length scale a");
  estimate->add_option("--hbar", o.hbar, "Reduced Planck constant");
  estimate->add_option("--mass", o.mass, "Particle mass");
  estimate->add_option("--method", o.method, "Energy backend")
      ->check(CLI::IsMember({"gamma", "quadrature", "optimized"}));
  add_format(estimate);

  CLI::App* table = app.add_subcommand("table", "Coefficient table with reference and known values");
  table->add_option("--n-list", o.n_list, "Comma-separated exponents; 'squarewell' selects the square well");
  table->add_option("--tol", o.tol, "Reference solver tolerance (reduced energy)");
  add_format(table);

  CLI::App* sweep = app.add_subcommand("sweep-beta", "Coefficient C(beta) on a beta grid");
  sweep->add_option("--beta-from", o.beta_from, "First beta (>= 2)");
  sweep->add_option("--beta-to", o.beta_to, "Last beta");
  sweep->add_option("--step", o.step, "Beta increment");
  add_format(sweep);

  CLI::App* wave = app.add_subcommand("wavefunction", "Sampled ground-state wavefunction as z,psi");
  wave->add_option("--n", o.n, "Potential exponent N >= 2 or 'squarewell'")->required();
  wave->add_option("--mu", o.mu, "Reduced potential strength mu_tilde");
  wave->add_option("--source", o.source, "trial or reference")->check(CLI::IsMember({"trial", "reference"}));
  wave->add_option("--points", o.points, "Number of samples (>= 16)");
  wave->add_option("--tol", o.tol, "Unused; accepted for a uniform flag set");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (estimate->parsed()) run_estimate(o, out);
    if (table->parsed()) run_table(o, out);
    if (sweep->parsed()) run_sweep(o, out);
    if (wave->parsed()) run_wavefunction(o, out);
  } catch (const DomainError& e) {
    err << "flatwell: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "flatwell: " << e.what() << '\n';
    return kExitConvergence;
  }
  return kExitOk;
}

}  // namespace flatwell::cli
