#pragma once

#include <cstddef>
#include <vector>

#include "flatwell/potential.hpp"
#include "flatwell/trial_energy.hpp"

namespace flatwell {

/// Three-point finite-difference Hamiltonian -d^2/dz^2 + V(z) on the interior
/// nodes of [-L, L] with Dirichlet boundaries.
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  double spacing = 0.0;
  double half_width = 0.0;

  std::size_t size() const { return diagonal.size(); }
  /// Reduced coordinate of interior node i (0-based), -L + (i + 1) h, computed
  /// from the centre so mirrored nodes are exact negatives.
  double node(std::size_t i) const {
    const double offset = 2.0 * static_cast<double>(i + 1) - static_cast<double>(size() + 1);
    return 0.5 * offset * spacing;
  }
};

struct ReferenceSolution {
  double reduced_energy = 0.0;
  double domain_half_width = 0.0;
  std::size_t grid_points = 0;
  double observed_order = 0.0;
  bool extrapolated = false;
  double residual_estimate = 0.0;
};

struct SolverOptions {
  /// Safety factor F in L = (F * guess / mu_tilde)^(1/N).
  double domain_factor = 50.0;
  /// Interval count of the coarsest grid; doubled each refinement.
  std::size_t initial_intervals = 2048;
  std::size_t max_intervals = std::size_t{1} << 20;
};

/// L = (F * energy_guess / mu_tilde)^(1/N), clamped to L >= 2.
/// Throws DomainError for the square well, whose reduced domain is fixed at [-1, 1].
double auto_domain(const ReducedProblem& rp, double energy_guess, double domain_factor = 50.0);

/// Smallest L with integral over [0, L] of sqrt(max(0, V(z) - energy_guess)) dz
/// >= decay_exponent, so the WKB amplitude at the wall is below exp(-decay_exponent).
/// Throws DomainError for the square well.
double decay_half_width(const ReducedProblem& rp, double energy_guess, double decay_exponent = 20.0);

/// Energy used to size the domain: pi^2/4 * mu_tilde^(2/(N+2)), an upper estimate
/// of the reduced ground energy obtained from the exact scaling in mu_tilde.
double domain_energy_guess(const ReducedProblem& rp);

/// h = 2L/(n+1), nodes z_i = -L + i h (i = 1..n). The square well always uses L = 1, V = 0.
/// Throws DomainError for n < 3 or L <= 0.
TridiagonalOperator discretize(const ReducedProblem& rp, double half_width, std::size_t interior_points);

/// Number of eigenvalues strictly below lambda (Sturm sequence sign count).
std::size_t sturm_count(const TridiagonalOperator& op, double lambda);

/// Smallest eigenvalue within +-tol by bisection on the Gershgorin interval.
double smallest_eigenvalue(const TridiagonalOperator& op, double tol);

/// Ground state by grid doubling plus Richardson extrapolation of the h^2 error.
/// The power-well domain is the larger of auto_domain and decay_half_width.
/// Throws DomainError for target_tol < 1e-8; ConvergenceError if the
/// extrapolated values have not settled by options.max_intervals.
ReferenceSolution solve_ground_state(const ReducedProblem& rp, double target_tol,
                                     const SolverOptions& options = {});

/// Discrete ground-state eigenvector by shifted inverse iteration, normalized so
/// sum(psi^2) h = 1 with psi positive at the centre.
WavefunctionSamples ground_wavefunction(const ReducedProblem& rp, double half_width, std::size_t interior_points);

}  // namespace flatwell
