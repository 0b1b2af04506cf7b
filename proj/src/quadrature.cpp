#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "flatwell/errors.hpp"
#include "flatwell/numerics.hpp"

namespace flatwell {

namespace {

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule
// (QUADPACK qk15). kGaussWeights pair with kKronrodNodes[1], [3], [5], [7].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTailTarget = 1e-18;

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;
};

bool by_error(const Panel& a, const Panel& b) { return a.error < b.error; }

template <class F>
Panel kronrod15(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double absolute = std::abs(fc) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrodWeights[j] * (f1 + f2);
    absolute += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  return Panel{lo, hi, kronrod * half, std::abs(kronrod - gauss) * half, absolute * half};
}

struct AdaptiveResult {
  double value;
  double error;
  std::size_t evaluations;
};

// Global adaptive bisection: always split the panel with the largest error
// estimate until the summed estimate meets the tolerance.
template <class F>
AdaptiveResult integrate_adaptive(const F& f, double lo, double hi, double rel_tol, double abs_tol,
                                  std::size_t budget) {
  std::vector<Panel> heap{kronrod15(f, lo, hi)};
  std::size_t evaluations = 15;
  double value = heap.front().value;
  double error = heap.front().error;

  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (evaluations + 30 > budget) {
      throw ConvergenceError("quadrature budget of " + std::to_string(budget) +
                             " evaluations exhausted with error estimate " + std::to_string(error));
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(worst.lo < mid && mid < worst.hi)) {
      throw ConvergenceError("quadrature refinement stalled at panel width " +
                             std::to_string(worst.hi - worst.lo));
    }
    const Panel left = kronrod15(f, worst.lo, mid);
    const Panel right = kronrod15(f, mid, worst.hi);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  // Re-sum from the panels so the running updates leave no drift.
  value = 0.0;
  error = 0.0;
  double absolute = 0.0;
  for (const Panel& p : heap) {
    value += p.value;
    error += p.error;
    absolute += p.abs_value;
  }
  error += 50.0 * kEps * absolute;
  return AdaptiveResult{value, error, evaluations};
}

// Upper bound on the incomplete Gamma tail, integral of u^(s-1) e^-u over [cut, inf).
// Valid for cut > s - 1.
double gamma_tail_bound(double s, double cut) {
  const double lead = std::exp((s - 1.0) * std::log(cut) - cut);
  if (s <= 1.0) return lead;
  return lead * cut / (cut - (s - 1.0));
}

double choose_cutoff(double s) {
  double cut = 2.0 * std::max(s, 1.0) + 40.0;
  while (gamma_tail_bound(s, cut) > kTailTarget) cut *= 1.25;
  return cut;
}

}  // namespace

QuadratureResult integrate_decaying_moment(double p, double c, double beta, const QuadratureOptions& options) {
  if (!std::isfinite(p) || p < 0.0) throw DomainError("moment power p must be finite and >= 0");
  if (!std::isfinite(c) || c <= 0.0) throw DomainError("decay rate c must be finite and > 0");
  if (!std::isfinite(beta) || beta < 2.0) throw DomainError("beta must be finite and >= 2");
  if (!(options.rel_tol > 0.0) || options.abs_tol < 0.0) throw DomainError("invalid quadrature tolerance");

  // With u = c z^beta the integral becomes c^(-s)/beta * Gamma-kernel(s), s = (p+1)/beta.
  const double s = (p + 1.0) / beta;
  const double scale = std::exp(-s * std::log(c)) / beta;
  const double cutoff = choose_cutoff(s);
  const double tail = gamma_tail_bound(s, cutoff);
  const double abs_tol = options.abs_tol / scale;

  AdaptiveResult kernel{};
  if (s < 1.0) {
    // u = t^(1/s) removes the integrable u^(s-1) singularity at the origin.
    const double inv_s = 1.0 / s;
    const auto integrand = [inv_s](double t) { return std::exp(-std::pow(t, inv_s)); };
    kernel = integrate_adaptive(integrand, 0.0, std::pow(cutoff, s), options.rel_tol, abs_tol,
                                options.max_evaluations);
    kernel.value *= inv_s;
    kernel.error *= inv_s;
  } else {
    const double power = s - 1.0;
    const auto integrand = [power](double u) { return std::exp(power * std::log(u) - u); };
    kernel = integrate_adaptive(integrand, 0.0, cutoff, options.rel_tol, abs_tol, options.max_evaluations);
  }

  QuadratureResult result;
  result.value = scale * kernel.value;
  result.error_bound = scale * (kernel.error + tail);
  result.evaluations = kernel.evaluations;
  return result;
}

}  // namespace flatwell
