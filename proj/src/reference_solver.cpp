#include "flatwell/reference_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "flatwell/errors.hpp"

namespace flatwell {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxInverseIterations = 200;

struct GershgorinBounds {
  double lo;
  double hi;
};

GershgorinBounds gershgorin(const TridiagonalOperator& op) {
  const std::size_t n = op.size();
  GershgorinBounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
    b.lo = std::min(b.lo, op.diagonal[i] - radius);
    b.hi = std::max(b.hi, op.diagonal[i] + radius);
  }
  return b;
}

double energy_on_grid(const ReducedProblem& rp, double half_width, std::size_t intervals, double tol) {
  return smallest_eigenvalue(discretize(rp, half_width, intervals - 1), tol);
}

// LDL^T factorization of T - shift I, valid while the shifted matrix is
// positive definite (shift below the smallest eigenvalue).
class ShiftedSolver {
 public:
  ShiftedSolver(const TridiagonalOperator& op, double shift) : op_(op), pivots_(op.size()), lower_(op.size()) {
    pivots_[0] = op.diagonal[0] - shift;
    for (std::size_t i = 1; i < op.size(); ++i) {
      lower_[i] = op.off_diagonal[i - 1] / pivots_[i - 1];
      pivots_[i] = op.diagonal[i] - shift - lower_[i] * op.off_diagonal[i - 1];
    }
  }

  void solve_in_place(std::vector<double>& x) const {
    const std::size_t n = x.size();
    for (std::size_t i = 1; i < n; ++i) x[i] -= lower_[i] * x[i - 1];
    x[n - 1] /= pivots_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = (x[i] - op_.off_diagonal[i] * x[i + 1]) / pivots_[i];
  }

 private:
  const TridiagonalOperator& op_;
  std::vector<double> pivots_;
  std::vector<double> lower_;
};

void normalize(std::vector<double>& v, double h) {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  double scale = 1.0 / std::sqrt(norm2 * h);
  if (v[v.size() / 2] < 0.0) scale = -scale;
  for (double& x : v) x *= scale;
}

}  // namespace

double domain_energy_guess(const ReducedProblem& rp) {
  const ReducedPower& p = rp.power_shape();
  return std::numbers::pi * std::numbers::pi / 4.0 * std::pow(p.mu_tilde, 2.0 / (p.exponent + 2.0));
}

double auto_domain(const ReducedProblem& rp, double energy_guess, double domain_factor) {
  const ReducedPower& p = rp.power_shape();
  if (!std::isfinite(energy_guess) || energy_guess <= 0.0) throw DomainError("energy guess must be > 0");
  if (!std::isfinite(domain_factor) || domain_factor <= 0.0) throw DomainError("domain factor must be > 0");
  const double half_width = std::pow(domain_factor * energy_guess / p.mu_tilde, 1.0 / p.exponent);
  return std::max(half_width, 2.0);
}

double decay_half_width(const ReducedProblem& rp, double energy_guess, double decay_exponent) {
  const ReducedPower& p = rp.power_shape();
  if (!std::isfinite(energy_guess) || energy_guess <= 0.0) throw DomainError("energy guess must be > 0");
  if (!std::isfinite(decay_exponent) || decay_exponent <= 0.0) throw DomainError("decay exponent must be > 0");
  const double turning_point = std::pow(energy_guess / p.mu_tilde, 1.0 / p.exponent);
  const double dz = turning_point / 1000.0;
  const auto kappa = [&](double z) { return std::sqrt(std::max(0.0, reduced_potential(rp, z) - energy_guess)); };
  double z = turning_point;
  double action = 0.0;
  double previous = kappa(z);
  // kappa grows without bound past the turning point, so the loop terminates.
  while (action < decay_exponent) {
    const double next = kappa(z + dz);
    action += 0.5 * (previous + next) * dz;
    previous = next;
    z += dz;
  }
  return z;
}

TridiagonalOperator discretize(const ReducedProblem& rp, double half_width, std::size_t interior_points) {
  if (interior_points < 3) {
    throw DomainError("discretization needs at least 3 interior points, got " + std::to_string(interior_points));
  }
  if (rp.is_square_well()) half_width = 1.0;
  if (!std::isfinite(half_width) || half_width <= 0.0) throw DomainError("domain half-width must be > 0");

  TridiagonalOperator op;
  op.half_width = half_width;
  op.spacing = 2.0 * half_width / static_cast<double>(interior_points + 1);
  const double inv_h2 = 1.0 / (op.spacing * op.spacing);
  op.diagonal.resize(interior_points);
  op.off_diagonal.assign(interior_points - 1, -inv_h2);
  for (std::size_t i = 0; i < interior_points; ++i) {
    const double v = rp.is_square_well() ? 0.0 : reduced_potential(rp, op.node(i));
    op.diagonal[i] = 2.0 * inv_h2 + v;
  }
  return op;
}

std::size_t sturm_count(const TridiagonalOperator& op, double lambda) {
  double max_off2 = 1.0;
  for (double e : op.off_diagonal) max_off2 = std::max(max_off2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_off2;

  std::size_t count = 0;
  double q = op.diagonal[0] - lambda;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == op.size()) break;
    const double e = op.off_diagonal[i];
    q = op.diagonal[i + 1] - lambda - e * e / q;
  }
  return count;
}

double smallest_eigenvalue(const TridiagonalOperator& op, double tol) {
  if (!(tol > 0.0)) throw DomainError("eigenvalue tolerance must be > 0");
  if (op.size() == 0) throw DomainError("empty operator");
  auto [lo, hi] = gershgorin(op);
  // Invariant: no eigenvalue below lo, at least one below or at hi.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) break;
    if (sturm_count(op, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ReferenceSolution solve_ground_state(const ReducedProblem& rp, double target_tol, const SolverOptions& options) {
  if (!(target_tol >= 1e-8)) throw DomainError("reference solver target tolerance must be >= 1e-8");
  if (options.initial_intervals < 4) throw DomainError("initial grid needs at least 4 intervals");

  double half_width = 1.0;
  if (!rp.is_square_well()) {
    const double guess = domain_energy_guess(rp);
    half_width = std::max(auto_domain(rp, guess, options.domain_factor), decay_half_width(rp, guess));
  }
  const double eig_tol = 1e-3 * target_tol;

  std::size_t intervals = options.initial_intervals;
  double coarse = energy_on_grid(rp, half_width, intervals, eig_tol);
  double medium = energy_on_grid(rp, half_width, 2 * intervals, eig_tol);
  double previous_extrapolation = (4.0 * medium - coarse) / 3.0;
  intervals *= 2;

  while (2 * intervals <= options.max_intervals) {
    intervals *= 2;
    const double fine = energy_on_grid(rp, half_width, intervals, eig_tol);
    const double extrapolation = (4.0 * fine - medium) / 3.0;
    if (std::abs(extrapolation - previous_extrapolation) < target_tol) {
      ReferenceSolution out;
      out.reduced_energy = extrapolation;
      out.domain_half_width = half_width;
      out.grid_points = intervals - 1;
      out.observed_order = std::log2((coarse - medium) / (medium - fine));
      out.extrapolated = true;
      out.residual_estimate = std::abs(fine - medium);
      return out;
    }
    coarse = medium;
    medium = fine;
    previous_extrapolation = extrapolation;
  }
  throw ConvergenceError("reference solver did not settle within " + std::to_string(options.max_intervals) +
                         " grid intervals");
}

WavefunctionSamples ground_wavefunction(const ReducedProblem& rp, double half_width, std::size_t interior_points) {
  const TridiagonalOperator op = discretize(rp, half_width, interior_points);
  const auto [lo, hi] = gershgorin(op);
  const double tol = 64.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + 1e-12;
  const double lambda = smallest_eigenvalue(op, tol);
  const double shift = lambda - (10.0 * tol + 1e-9 * std::max(1.0, std::abs(lambda)));
  const ShiftedSolver solver(op, shift);

  std::vector<double> psi(op.size(), 1.0);
  normalize(psi, op.spacing);
  for (std::size_t iter = 0; iter < kMaxInverseIterations; ++iter) {
    std::vector<double> next = psi;
    solver.solve_in_place(next);
    normalize(next, op.spacing);
    double change = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      change = std::max(change, std::abs(next[i] - psi[i]));
      peak = std::max(peak, std::abs(next[i]));
    }
    psi = std::move(next);
    if (change <= 1e-12 * peak) {
      WavefunctionSamples out{{}, std::move(psi), WavefunctionSource::reference};
      out.grid.reserve(op.size());
      for (std::size_t i = 0; i < op.size(); ++i) out.grid.push_back(op.node(i));
      return out;
    }
  }
  throw ConvergenceError("inverse iteration did not converge in " + std::to_string(kMaxInverseIterations) +
                         " iterations");
}

}  // namespace flatwell
