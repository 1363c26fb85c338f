#pragma once

#include <stdexcept>
#include <string>

namespace blochspace {

// Raised when a physical-state precondition fails (hermiticity, unit trace,
// real diagonal components, ...).  Carries the violated property and the
// measured residual so callers can report exactly what went wrong.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string property, double residual, double tolerance)
      : std::runtime_error(property + ": residual " + std::to_string(residual) +
                           " exceeds tolerance " + std::to_string(tolerance)),
        property_(std::move(property)),
        residual_(residual),
        tolerance_(tolerance) {}

  const std::string& property() const { return property_; }
  double residual() const { return residual_; }
  double tolerance() const { return tolerance_; }

private:
  std::string property_;
  double residual_;
  double tolerance_;
};

}  // namespace blochspace
