#include "flatwell/known_results.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "flatwell/errors.hpp"

namespace flatwell {

std::optional<KnownValue> lookup(double exponent) {
  if (exponent == 2.0) {
    return KnownValue{2.0, 1.0 / std::numbers::sqrt2, "harmonic oscillator, E = hbar omega / 2", true};
  }
  if (exponent == 4.0) {
    // truncated to 15 significant digits
    return KnownValue{4.0, 0.667986259155777,
                      "pure quartic, Janke & Kleinert (1995) variational perturbation theory", false};
  }
  if (exponent == std::numeric_limits<double>::infinity()) return square_well_value();
  return std::nullopt;
}

KnownValue square_well_value() {
  return KnownValue{std::numeric_limits<double>::infinity(), std::numbers::pi * std::numbers::pi / 8.0,
                    "infinite square well of width 2a, E = pi^2 hbar^2 / (8 m a^2)", true};
}

std::optional<KnownValue> lookup(const ReducedProblem& rp) {
  if (rp.is_square_well()) return square_well_value();
  return lookup(rp.power_shape().exponent);
}

double relative_error(double estimate, double truth) {
  if (truth == 0.0) throw DomainError("relative error is undefined for a zero reference value");
  return (estimate - truth) / std::abs(truth);
}

}  // namespace flatwell
