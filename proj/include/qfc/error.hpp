#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

/// Matrix shapes that do not fit the operation (only 2x2 and 4x4 exist here).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside its physical domain. The message names the bound.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that should be Hermitian / PSD / unit-trace / unitary is not.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative search hit its iteration cap before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfc
