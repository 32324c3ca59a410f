#pragma once

#include <stdexcept>
#include <string>

namespace loglab {

// Argument outside an operation's stated domain, or malformed parameters.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative scheme (quadrature refinement, series transformation)
// exhausted its budget with the error estimate still above tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_error)
      : std::runtime_error(what), best_error_(best_error) {}

  // Error estimate at the point the scheme gave up.
  double best_error() const noexcept { return best_error_; }

 private:
  double best_error_;
};

// An integrand returned NaN/Inf at an abscissa that was not clipped.
// Samples are never silently zeroed; that would mask integrand bugs.
class NonFiniteSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loglab
