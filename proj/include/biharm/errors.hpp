#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

/// Evaluation point outside the operator's domain of definition.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Probe point too close to the domain boundary for the requested stencil.
struct RegionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Inversion of a zero divisor (or of zero) was requested.
struct ZeroDivisorError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The disk problem's contour-integral solvability condition failed.
/// Carries the offending integral value for diagnosis.
struct UnsolvableError : std::runtime_error {
  double integral;
  explicit UnsolvableError(double value)
      : std::runtime_error("unsolvable: contour integral = " + std::to_string(value)),
        integral(value) {}
};

}  // namespace biharm
