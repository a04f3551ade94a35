#pragma once

#include <stdexcept>
#include <string>

namespace longwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: wrong lengths, out-of-range parameters, bad plans.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A physical-space field came back with a non-negligible imaginary part.
class RealnessError : public Error {
 public:
  using Error::Error;
};

/// A Fourier symbol produced a non-finite value.
class SymbolError : public Error {
 public:
  using Error::Error;
};

/// Unknown model name.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Numerical differentiation did not converge.
class DifferentiationError : public Error {
 public:
  using Error::Error;
};

/// Two independent reference integrators disagree.
class ReferenceValidationError : public Error {
 public:
  using Error::Error;
};

/// Not enough usable records to fit a rate.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace longwave
