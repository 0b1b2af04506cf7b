#pragma once

#include <cstddef>
#include <functional>

namespace flatwell {

/// Natural log of the Gamma function for x > 0 (Lanczos approximation).
/// Throws DomainError for x <= 0 or non-finite x.
double ln_gamma(double x);

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

/// Integral of z^p exp(-c z^beta) over [0, inf), by adaptive Gauss-Kronrod
/// quadrature of the Gamma-type kernel obtained from u = c z^beta.
///
/// The error bound combines the per-panel Kronrod/Gauss discrepancy, an
/// analytic bound on the truncated tail and a rounding allowance.
/// Throws DomainError for p < 0, c <= 0 or beta < 2; ConvergenceError when
/// the tolerance is not met within the evaluation budget.
QuadratureResult integrate_decaying_moment(double p, double c, double beta,
                                           const QuadratureOptions& options = {});

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi]. f must be unimodal on the bracket.
/// The returned point is the best one evaluated, endpoints included.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace flatwell
