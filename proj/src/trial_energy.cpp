#include "flatwell/trial_energy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "flatwell/errors.hpp"
#include "flatwell/numerics.hpp"

namespace flatwell {

namespace {

// Relative accuracy envelope of the closed-form (ln_gamma based) route.
constexpr double kGammaRouteRelError = 1e-13;

void require_shape(double alpha, double beta) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("alpha must be finite and > 0, got " + std::to_string(alpha));
  }
  if (!std::isfinite(beta) || beta < 2.0) {
    throw DomainError("beta must be finite and >= 2, got " + std::to_string(beta));
  }
}

struct MomentValue {
  double value;
  double rel_error;
};

MomentValue moment_with_error(double p, double alpha, double beta, Backend backend) {
  require_shape(alpha, beta);
  if (!std::isfinite(p) || p < 0.0) throw DomainError("moment power must be finite and >= 0");
  if (backend == Backend::gamma) {
    const double log_value =
        -(p / beta) * std::log(2.0 * alpha) + ln_gamma((p + 1.0) / beta) - ln_gamma(1.0 / beta);
    return {std::exp(log_value), kGammaRouteRelError};
  }
  const QuadratureResult num = integrate_decaying_moment(p, 2.0 * alpha, beta);
  const QuadratureResult den = integrate_decaying_moment(0.0, 2.0 * alpha, beta);
  return {num.value / den.value, num.error_bound / num.value + den.error_bound / den.value};
}

EnergyEstimate make_estimate(const ReducedProblem& rp, double beta, double reduced_energy, Method method,
                             double error_bound) {
  const double mu_tilde = rp.power_shape().mu_tilde;
  EnergyEstimate e{};
  e.reduced_energy = reduced_energy;
  e.physical_energy = rp.to_physical_energy(reduced_energy);
  e.coefficient_C = reduced_energy / (reduced_to_coefficient_factor(beta) * std::pow(mu_tilde, 1.0 / beta));
  e.potential_exponent = 1.0 / beta;
  e.kinetic_exponent = 1.0 - e.potential_exponent;
  e.beta = beta;
  e.method = method;
  e.error_bound = error_bound;
  return e;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::gamma:
      return "gamma";
    case Method::quadrature:
      return "quadrature";
    case Method::optimized_alpha:
      return "optimized-alpha";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "gamma") return Method::gamma;
  if (name == "quadrature") return Method::quadrature;
  if (name == "optimized" || name == "optimized-alpha") return Method::optimized_alpha;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

double beta_for(double exponent) {
  if (!std::isfinite(exponent) || exponent < 2.0) {
    throw DomainError("exponent N must be finite and >= 2, got " + std::to_string(exponent));
  }
  return 0.5 * (exponent + 2.0);
}

double matched_alpha(const ReducedProblem& rp) {
  const ReducedPower& p = rp.power_shape();
  return std::sqrt(p.mu_tilde) / beta_for(p.exponent);
}

double normalization_constant(double alpha, double beta, double a, Backend backend) {
  require_shape(alpha, beta);
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("length a must be finite and > 0");
  double full_line = 0.0;
  if (backend == Backend::gamma) {
    full_line = 2.0 / beta * std::exp(-std::log(2.0 * alpha) / beta + ln_gamma(1.0 / beta));
  } else {
    full_line = 2.0 * integrate_decaying_moment(0.0, 2.0 * alpha, beta).value;
  }
  return 1.0 / std::sqrt(a * full_line);
}

TrialParams matched_trial(const ReducedProblem& rp, Backend backend) {
  const double beta = beta_for(rp.power_shape().exponent);
  const double alpha = matched_alpha(rp);
  return TrialParams{alpha, beta, normalization_constant(alpha, beta, rp.length_scale, backend)};
}

double moment(double p, double alpha, double beta, Backend backend) {
  return moment_with_error(p, alpha, beta, backend).value;
}

double reduced_to_coefficient_factor(double beta) { return std::exp2(1.0 - 1.0 / beta); }

EnergyEstimate energy_matched(const ReducedProblem& rp, Backend backend) {
  const double beta = beta_for(rp.power_shape().exponent);
  const double alpha = matched_alpha(rp);
  const MomentValue m = moment_with_error(beta - 2.0, alpha, beta, backend);
  const double reduced = beta * (beta - 1.0) * alpha * m.value;
  const Method method = backend == Backend::gamma ? Method::gamma : Method::quadrature;
  return make_estimate(rp, beta, reduced, method, reduced * m.rel_error);
}

double coefficient(double beta, Backend backend) {
  require_shape(1.0, beta);
  if (backend == Backend::gamma) {
    const double log_c = -((2.0 * beta - 3.0) / beta) * std::log(2.0) + std::log(beta) +
                         std::log(beta - 1.0) - (2.0 / beta) * std::log(beta) +
                         ln_gamma((beta - 1.0) / beta) - ln_gamma(1.0 / beta);
    return std::exp(log_c);
  }
  // Matched trial at mu_tilde = 1: alpha = 1 / beta.
  const double alpha = 1.0 / beta;
  const double reduced = beta * (beta - 1.0) * alpha * moment(beta - 2.0, alpha, beta, Backend::quadrature);
  return reduced / reduced_to_coefficient_factor(beta);
}

double rayleigh_quotient(const ReducedProblem& rp, double alpha, double beta, Backend backend) {
  const ReducedPower& p = rp.power_shape();
  require_shape(alpha, beta);
  const double kinetic = alpha * alpha * beta * beta * moment(2.0 * beta - 2.0, alpha, beta, backend);
  const double potential = p.mu_tilde * moment(p.exponent, alpha, beta, backend);
  return kinetic + potential;
}

OptimizedAlpha optimize_alpha(const ReducedProblem& rp, double beta) {
  require_shape(1.0, beta);
  const double alpha_m = matched_alpha(rp);
  const auto quotient = [&](double alpha) { return rayleigh_quotient(rp, alpha, beta, Backend::gamma); };
  const ScalarMinimum best = minimize_scalar(quotient, alpha_m / 10.0, alpha_m * 10.0, 1e-10 * alpha_m);
  const double at_matched = quotient(alpha_m);
  if (at_matched < best.value) return OptimizedAlpha{alpha_m, at_matched};
  return OptimizedAlpha{best.x, best.value};
}

EnergyEstimate estimate_energy(const ReducedProblem& rp, Method method) {
  switch (method) {
    case Method::gamma:
      return energy_matched(rp, Backend::gamma);
    case Method::quadrature:
      return energy_matched(rp, Backend::quadrature);
    case Method::optimized_alpha: {
      const double beta = beta_for(rp.power_shape().exponent);
      const OptimizedAlpha opt = optimize_alpha(rp, beta);
      return make_estimate(rp, beta, opt.reduced_energy, Method::optimized_alpha,
                           1e-12 * opt.reduced_energy);
    }
  }
  throw DomainError("unknown method");
}

WavefunctionSamples sample_trial(double alpha, double beta, double a, std::span<const double> grid) {
  const double amplitude = normalization_constant(alpha, beta, a);
  WavefunctionSamples out{{grid.begin(), grid.end()}, {}, WavefunctionSource::trial};
  out.values.reserve(grid.size());
  for (double z : grid) {
    const double az = std::abs(z);
    const double exponent = az == 0.0 ? 0.0 : alpha * std::exp(beta * std::log(az));
    out.values.push_back(amplitude * std::exp(-exponent));
  }
  return out;
}

}  // namespace flatwell
