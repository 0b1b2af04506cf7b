#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "flatwell/cli.hpp"
#include "flatwell/errors.hpp"
#include "flatwell/known_results.hpp"
#include "flatwell/numerics.hpp"
#include "flatwell/reference_solver.hpp"
#include "flatwell/report.hpp"
#include "flatwell/trial_energy.hpp"

namespace py = pybind11;
using namespace flatwell;

namespace {

Backend parse_backend(const std::string& name) {
  if (name == "gamma") return Backend::gamma;
  if (name == "quadrature") return Backend::quadrature;
  throw DomainError("unknown backend '" + name + "'");
}

py::object optional_number(double value) {
  if (std::isnan(value)) return py::none();
  return py::float_(value);
}

py::dict row_to_dict(const TableRow& r) {
  py::dict d;
  if (r.well.is_square_well()) {
    d["N"] = "squarewell";
  } else {
    d["N"] = *r.well.exponent;
  }
  d["beta"] = optional_number(r.beta);
  d["C_trial_gamma"] = optional_number(r.c_trial_gamma);
  d["C_trial_quadrature"] = optional_number(r.c_trial_quadrature);
  d["C_optimized"] = optional_number(r.c_optimized);
  d["C_reference"] = optional_number(r.c_reference);
  d["C_known"] = r.c_known ? py::object(py::float_(*r.c_known)) : py::none();
  d["rel_error_vs_reference"] = optional_number(r.rel_error_vs_reference);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ground-state energy estimates for power-law potential wells";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("error_bound", &QuadratureResult::error_bound)
      .def_readonly("evaluations", &QuadratureResult::evaluations);

  py::class_<EnergyEstimate>(m, "EnergyEstimate")
      .def_readonly("reduced_energy", &EnergyEstimate::reduced_energy)
      .def_readonly("physical_energy", &EnergyEstimate::physical_energy)
      .def_readonly("coefficient_C", &EnergyEstimate::coefficient_C)
      .def_readonly("kinetic_exponent", &EnergyEstimate::kinetic_exponent)
      .def_readonly("potential_exponent", &EnergyEstimate::potential_exponent)
      .def_readonly("beta", &EnergyEstimate::beta)
      .def_readonly("error_bound", &EnergyEstimate::error_bound)
      .def_property_readonly("method", [](const EnergyEstimate& e) { return std::string(to_string(e.method)); });

  py::class_<ReferenceSolution>(m, "ReferenceSolution")
      .def_readonly("reduced_energy", &ReferenceSolution::reduced_energy)
      .def_readonly("domain_half_width", &ReferenceSolution::domain_half_width)
      .def_readonly("grid_points", &ReferenceSolution::grid_points)
      .def_readonly("observed_order", &ReferenceSolution::observed_order)
      .def_readonly("extrapolated", &ReferenceSolution::extrapolated)
      .def_readonly("residual_estimate", &ReferenceSolution::residual_estimate);

  m.def("ln_gamma", &ln_gamma, py::arg("x"));
  m.def(
      "integrate_decaying_moment",
      [](double p, double c, double beta) { return integrate_decaying_moment(p, c, beta); }, py::arg("p"),
      py::arg("c"), py::arg("beta"));

  m.def("beta_for", &beta_for, py::arg("n"));
  m.def(
      "coefficient", [](double beta, const std::string& backend) { return coefficient(beta, parse_backend(backend)); },
      py::arg("beta"), py::arg("backend") = "gamma");
  m.def(
      "moment",
      [](double p, double alpha, double beta, const std::string& backend) {
        return moment(p, alpha, beta, parse_backend(backend));
      },
      py::arg("p"), py::arg("alpha"), py::arg("beta"), py::arg("backend") = "gamma");
  m.def(
      "estimate",
      [](double n, double mu, double a, double hbar, double mass, const std::string& method) {
        const ReducedProblem rp = reduce(make_power_potential(mu, a, n), PhysicalConstants(hbar, mass));
        return estimate_energy(rp, parse_method(method));
      },
      py::arg("n"), py::arg("mu") = 1.0, py::arg("a") = 1.0, py::arg("hbar") = 1.0, py::arg("mass") = 1.0,
      py::arg("method") = "gamma");
  m.def(
      "rayleigh_quotient",
      [](double n, double mu_tilde, double alpha, double beta, const std::string& backend) {
        return rayleigh_quotient(ReducedProblem::power(mu_tilde, n), alpha, beta, parse_backend(backend));
      },
      py::arg("n"), py::arg("mu_tilde"), py::arg("alpha"), py::arg("beta"), py::arg("backend") = "gamma");
  m.def(
      "optimize_alpha",
      [](double n, double mu_tilde) {
        const OptimizedAlpha o = optimize_alpha(ReducedProblem::power(mu_tilde, n), beta_for(n));
        return std::make_tuple(o.alpha_star, o.reduced_energy);
      },
      py::arg("n"), py::arg("mu_tilde") = 1.0);
  m.def(
      "solve_ground_state",
      [](const std::string& well, double mu_tilde, double tol) {
        return solve_ground_state(WellSpec::parse(well).reduced(mu_tilde), tol);
      },
      py::arg("well"), py::arg("mu_tilde") = 1.0, py::arg("tol") = 1e-8,
      "Reference ground state; `well` is an exponent such as '4' or 'squarewell'.");
  m.def(
      "lookup",
      [](double n) -> py::object {
        const auto v = lookup(n);
        if (!v) return py::none();
        py::dict d;
        d["coefficient_C"] = v->coefficient_C;
        d["provenance"] = v->provenance;
        d["exact"] = v->exact;
        return d;
      },
      py::arg("n"));
  m.def("relative_error", &relative_error, py::arg("estimate"), py::arg("truth"));
  m.def(
      "table",
      [](const std::string& n_list, double tol) {
        py::list out;
        for (const TableRow& r : compute_table(parse_well_list(n_list), tol)) out.append(row_to_dict(r));
        return out;
      },
      py::arg("n_list"), py::arg("tol") = 1e-8);
  m.def(
      "sweep_beta",
      [](double beta_from, double beta_to, double step) {
        std::vector<std::tuple<double, double, double>> rows;
        for (const SweepRow& r : sweep_beta(beta_from, beta_to, step)) rows.emplace_back(r.beta, r.c, r.c_over_beta);
        return rows;
      },
      py::arg("beta_from"), py::arg("beta_to"), py::arg("step") = 1.0);
  m.def(
      "wavefunction",
      [](const std::string& well, double mu_tilde, const std::string& source, std::size_t points) {
        const WavefunctionSource src = source == "reference" ? WavefunctionSource::reference : WavefunctionSource::trial;
        WavefunctionSamples s = wavefunction_report(WellSpec::parse(well), mu_tilde, src, points);
        return std::make_tuple(std::move(s.grid), std::move(s.values));
      },
      py::arg("well"), py::arg("mu_tilde") = 1.0, py::arg("source") = "trial", py::arg("points") = 201);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the flatwell command line in-process; returns (exit_code, stdout, stderr).");
}
