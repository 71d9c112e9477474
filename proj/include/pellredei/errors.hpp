#pragma once

#include <stdexcept>
#include <string>

namespace pellredei {

/// Raised when an operation is applied outside its mathematical domain
/// (negative isqrt argument, mismatched field parameters, zero denominator).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The parameter d is a perfect square, so x^2 - d y^2 = 1 has only (1, 0).
class PerfectSquareError : public DomainError {
 public:
  explicit PerfectSquareError(const std::string& d)
      : DomainError("d = " + d + " is a perfect square") {}
};

/// A point handed to the hyperbola group does not satisfy x^2 - d y^2 = 1.
class CurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested something deliberately left out, e.g. the negative Pell equation.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two computations that must agree did not. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pellredei
