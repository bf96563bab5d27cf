#ifndef GMLIFE_ERRORS_HPP_
#define GMLIFE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gmlife {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Result (or a required intermediate) is not representable as a double.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// A series, continued fraction or quadrature exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gmlife

#endif  // GMLIFE_ERRORS_HPP_
