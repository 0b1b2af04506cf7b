#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "flatwell/potential.hpp"

namespace flatwell {

/// How the generalized-Gaussian moments are evaluated.
enum class Backend { gamma, quadrature };

/// How an energy estimate was produced.
enum class Method { gamma, quadrature, optimized_alpha };

std::string_view to_string(Method m);
/// Accepts "gamma", "quadrature", "optimized" / "optimized-alpha". Throws DomainError otherwise.
Method parse_method(std::string_view name);

/// Trial wavefunction psi(x) = A exp(-alpha |x/a|^beta).
struct TrialParams {
  double alpha;
  double beta;
  double norm_A;
};

/// Ground-state energy in the form E = C (hbar^2 / m a^2)^(1 - 1/beta) mu^(1/beta).
struct EnergyEstimate {
  double reduced_energy;
  double physical_energy;
  double coefficient_C;
  double kinetic_exponent;
  double potential_exponent;
  double beta;
  Method method;
  double error_bound;
};

enum class WavefunctionSource { trial, reference };

struct WavefunctionSamples {
  std::vector<double> grid;
  std::vector<double> values;
  WavefunctionSource source;
};

/// Trial exponent matched to the potential's asymptotics, beta = (N + 2) / 2.
double beta_for(double exponent);

/// alpha = sqrt(mu_tilde) / beta_for(N). Throws DomainError for the square well.
double matched_alpha(const ReducedProblem& rp);

/// A with A^2 a * integral of exp(-2 alpha |z|^beta) over the real line = 1.
double normalization_constant(double alpha, double beta, double a, Backend backend = Backend::gamma);

TrialParams matched_trial(const ReducedProblem& rp, Backend backend = Backend::gamma);

/// <|z|^p> under the weight exp(-2 alpha |z|^beta).
double moment(double p, double alpha, double beta, Backend backend);

/// Energy of the matched trial function (alpha and beta fixed by asymptotic matching).
EnergyEstimate energy_matched(const ReducedProblem& rp, Backend backend);

/// Coefficient C(beta) of the matched estimate; independent of mu.
double coefficient(double beta, Backend backend);

/// Factor 2^(1 - 1/beta) converting a reduced energy at mu_tilde = 1 into C.
double reduced_to_coefficient_factor(double beta);

/// Rayleigh quotient of psi = exp(-alpha |z|^beta) for -psi'' + mu_tilde |z|^N psi.
/// beta need not match N.
double rayleigh_quotient(const ReducedProblem& rp, double alpha, double beta, Backend backend);

struct OptimizedAlpha {
  double alpha_star;
  double reduced_energy;
};

/// Minimizes the Rayleigh quotient over alpha in [alpha_m / 10, 10 alpha_m].
OptimizedAlpha optimize_alpha(const ReducedProblem& rp, double beta);

/// Dispatches to energy_matched or optimize_alpha (with beta = beta_for(N)).
EnergyEstimate estimate_energy(const ReducedProblem& rp, Method method);

/// psi(z) = A exp(-alpha |z|^beta) on the given reduced grid.
WavefunctionSamples sample_trial(double alpha, double beta, double a, std::span<const double> grid);

}  // namespace flatwell
