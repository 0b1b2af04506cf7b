#include "flatwell/potential.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "flatwell/errors.hpp"

namespace flatwell {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be finite and positive, got " + std::to_string(value));
  }
}

void require_exponent(double exponent) {
  if (!std::isfinite(exponent) || exponent < 2.0) {
    throw DomainError("exponent N must be finite and >= 2, got " + std::to_string(exponent));
  }
}

// mu * |r|^N evaluated as mu * exp(N ln|r|) so that large or fractional N
// cannot overflow an intermediate power.
double log_space_power(double mu, double r, double exponent) {
  const double ar = std::abs(r);
  if (ar == 0.0) return 0.0;
  return mu * std::exp(exponent * std::log(ar));
}

}  // namespace

PhysicalConstants::PhysicalConstants(double hbar, double mass) : hbar_(hbar), mass_(mass) {
  require_positive(hbar, "hbar");
  require_positive(mass, "mass");
}

Potential make_power_potential(double mu, double a, double exponent) {
  require_positive(mu, "mu");
  require_positive(a, "a");
  require_exponent(exponent);
  return PowerWell{mu, a, exponent};
}

Potential make_square_well(double a) {
  require_positive(a, "a");
  return InfiniteSquareWell{a};
}

double evaluate_potential(const Potential& p, double x) {
  if (!std::isfinite(x)) throw DomainError("position must be finite");
  if (const auto* w = std::get_if<PowerWell>(&p)) {
    return log_space_power(w->mu, x / w->a, w->exponent);
  }
  const auto& sq = std::get<InfiniteSquareWell>(p);
  return std::abs(x) < sq.a ? 0.0 : std::numeric_limits<double>::infinity();
}

ReducedProblem ReducedProblem::power(double mu_tilde, double exponent) {
  require_positive(mu_tilde, "mu_tilde");
  require_exponent(exponent);
  return ReducedProblem{ReducedPower{mu_tilde, exponent}, 1.0, 1.0};
}

ReducedProblem ReducedProblem::square_well() { return ReducedProblem{ReducedSquareWell{}, 1.0, 1.0}; }

const ReducedPower& ReducedProblem::power_shape() const {
  if (const auto* p = std::get_if<ReducedPower>(&shape)) return *p;
  throw DomainError("operation requires a power-law well, got the infinite square well");
}

ReducedProblem reduce(const Potential& p, const PhysicalConstants& c) {
  const auto scale_for = [&](double a) { return c.hbar() * c.hbar() / (2.0 * c.mass() * a * a); };
  if (const auto* w = std::get_if<PowerWell>(&p)) {
    const double eps0 = scale_for(w->a);
    return ReducedProblem{ReducedPower{w->mu / eps0, w->exponent}, eps0, w->a};
  }
  const auto& sq = std::get<InfiniteSquareWell>(p);
  return ReducedProblem{ReducedSquareWell{}, scale_for(sq.a), sq.a};
}

double reduced_potential(const ReducedProblem& rp, double z) {
  if (const auto* p = std::get_if<ReducedPower>(&rp.shape)) {
    return log_space_power(p->mu_tilde, z, p->exponent);
  }
  return std::abs(z) < 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

double harmonic_frequency(const Potential& p, const PhysicalConstants& c) {
  const auto* w = std::get_if<PowerWell>(&p);
  if (w == nullptr || w->exponent != 2.0) {
    throw DomainError("harmonic frequency is defined only for the N = 2 well");
  }
  return std::sqrt(2.0 * w->mu / (c.mass() * w->a * w->a));
}

}  // namespace flatwell
