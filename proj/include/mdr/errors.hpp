#ifndef MDR_ERRORS_HPP
#define MDR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdr {

// Input failed a structural invariant (non-stochastic vector, ragged matrix, ...).
class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A pair of inputs is mutually inconsistent (marginal mismatch, stale optimum value, ...).
class ConsistencyError : public std::invalid_argument {
 public:
  ConsistencyError(const std::string& msg, double max_deviation)
      : std::invalid_argument(msg), max_deviation(max_deviation) {}
  double max_deviation = 0.0;
};

// An iterative solver ran out of iterations; carries the residual it got stuck at.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual = 0.0;
};

// An enumeration or grid would exceed its configured size guard.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& msg, double required, double limit)
      : std::runtime_error(msg), required(required), limit(limit) {}
  double required = 0.0;
  double limit = 0.0;
};

// Numerical rank decision could not be made reliably.
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mdr

#endif  // MDR_ERRORS_HPP
