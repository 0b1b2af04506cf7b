#pragma once

#include <variant>

namespace flatwell {

class PhysicalConstants {
 public:
  /// Throws DomainError unless both values are finite and positive.
  PhysicalConstants(double hbar, double mass);

  double hbar() const { return hbar_; }
  double mass() const { return mass_; }

 private:
  double hbar_;
  double mass_;
};

/// V(x) = mu |x/a|^N with N >= 2 (N may be odd or non-integer).
struct PowerWell {
  double mu;
  double a;
  double exponent;
};

/// V = 0 on (-a, a), infinite elsewhere.
struct InfiniteSquareWell {
  double a;
};

using Potential = std::variant<PowerWell, InfiniteSquareWell>;

Potential make_power_potential(double mu, double a, double exponent);
Potential make_square_well(double a);

/// Potential energy at x. Returns +infinity outside an infinite square well.
double evaluate_potential(const Potential& p, double x);

/// Power-law well in reduced units: -psi'' + mu_tilde |z|^N psi = E psi.
struct ReducedPower {
  double mu_tilde;
  double exponent;
};

struct ReducedSquareWell {};

/// Nondimensional form of a potential. Reduced coordinate z = x / a,
/// reduced energy E / energy_scale with energy_scale = hbar^2 / (2 m a^2).
struct ReducedProblem {
  std::variant<ReducedPower, ReducedSquareWell> shape;
  double energy_scale = 1.0;
  double length_scale = 1.0;

  /// Problem stated directly in reduced units (energy_scale = length_scale = 1).
  static ReducedProblem power(double mu_tilde, double exponent);
  static ReducedProblem square_well();

  bool is_square_well() const { return std::holds_alternative<ReducedSquareWell>(shape); }
  /// Throws DomainError for the square-well variant.
  const ReducedPower& power_shape() const;

  double to_physical_energy(double reduced_energy) const { return reduced_energy * energy_scale; }
};

ReducedProblem reduce(const Potential& p, const PhysicalConstants& c);

/// Reduced potential mu_tilde |z|^N; for the square well 0 inside |z| < 1
/// and +infinity outside.
double reduced_potential(const ReducedProblem& rp, double z);

/// omega = sqrt(2 mu / (m a^2)). Throws DomainError unless p is a PowerWell with N = 2.
double harmonic_frequency(const Potential& p, const PhysicalConstants& c);

}  // namespace flatwell
