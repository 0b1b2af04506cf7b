#pragma once

#include <optional>
#include <string>

#include "flatwell/potential.hpp"

namespace flatwell {

/// Literature or exact ground-state coefficient C in
/// E = C (hbar^2 / m a^2)^(1 - 1/beta) mu^(1/beta).
struct KnownValue {
  double exponent;  // +infinity for the infinite square well
  double coefficient_C;
  std::string provenance;
  bool exact;
};

/// Registered values: N = 2 (exact), N = 4 (Janke-Kleinert), and the square
/// well under exponent = +infinity. Anything else yields nullopt.
std::optional<KnownValue> lookup(double exponent);
KnownValue square_well_value();
std::optional<KnownValue> lookup(const ReducedProblem& rp);

/// (estimate - truth) / |truth|. Throws DomainError when truth is zero.
double relative_error(double estimate, double truth);

}  // namespace flatwell
