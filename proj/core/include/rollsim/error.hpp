#pragma once

#include <stdexcept>
#include <string>

namespace rollsim {

// Invalid construction input: bad coefficients, violated parameter invariants.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a formula (arcsin > 1, 0/0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative numerical routine failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rollsim
