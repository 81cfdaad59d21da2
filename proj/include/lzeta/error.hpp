#pragma once

#include <stdexcept>
#include <string>

namespace lzeta {

/// Bad arguments: unsupported method, k < 1, digits <= 0, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain (|q| >= 1, Re(t) <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact division by zero in one of the rational rings.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series did not reach its target accuracy below the term cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lzeta
