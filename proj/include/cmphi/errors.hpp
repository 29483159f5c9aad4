#pragma once

#include <stdexcept>
#include <string>

namespace cmphi {

/// Argument outside the mathematical domain of an operation (cut segment,
/// negative alpha for the ratio bound, |z| >= 1 for g, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative or truncated procedure hit its cap before meeting the
/// requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic exceeded the configured bit budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quadrature node produced a non-finite integrand value.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmphi
