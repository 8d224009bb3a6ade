#pragma once

#include <stdexcept>
#include <string>

namespace lcho {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial or oscillator degree outside the supported range.
class invalid_degree : public error {
 public:
  using error::error;
};

/// Argument violates an operation's precondition.
class invalid_argument : public error {
 public:
  using error::error;
};

/// Root finding or node-doubling comparison did not settle.
class quadrature_nonconvergence : public error {
 public:
  using error::error;
};

/// Fock truncation too small (or too large) for the requested computation.
class truncation_error : public error {
 public:
  using error::error;
};

/// Five-vector handed to a translation is not on the contracted carrier s = 1.
class invalid_carrier : public error {
 public:
  using error::error;
};

}  // namespace lcho
