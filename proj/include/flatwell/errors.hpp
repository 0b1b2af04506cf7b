#pragma once

#include <stdexcept>
#include <string>

namespace flatwell {

/// Raised when an input lies outside the domain an operation accepts.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an iterative numerical procedure fails to meet its tolerance
/// within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flatwell
