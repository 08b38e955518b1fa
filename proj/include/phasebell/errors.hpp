#pragma once

#include <stdexcept>
#include <string>

namespace phasebell {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A distribution or record model that cannot be normalized or evaluated.
class InvalidModelError : public Error {
  public:
    using Error::Error;
};

// A second-harmonic moment with modulus above 1 (outside the unit disk).
class InvalidMomentError : public Error {
  public:
    using Error::Error;
};

// An effective visibility with modulus above 1.
class InvalidVisibilityError : public Error {
  public:
    using Error::Error;
};

// A Pauli label outside {I, X, Y, Z} x {I, X, Y, Z}.
class InvalidObservableError : public Error {
  public:
    using Error::Error;
};

// Fewer samples or windows than an estimator needs.
class InsufficientDataError : public Error {
  public:
    using Error::Error;
};

// Reduced state with vanishing trace (kappa = 0 collapse or zero kernel).
class DegenerateStateError : public Error {
  public:
    using Error::Error;
};

// Bad run configuration: preconditions on durations, windows, paths, flags.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace phasebell
