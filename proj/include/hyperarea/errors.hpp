#pragma once

#include <stdexcept>
#include <string>

namespace hyperarea {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A request that cannot be honoured with the given parameters
/// (counts out of range, unsupported body/method pairings, ...).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed (no bracket, residual too large, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A power series was evaluated outside its disc of convergence.
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A displacement map produced a fixed point on a sampled boundary point.
class MapInvalidError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperarea
