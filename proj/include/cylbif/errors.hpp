#pragma once

#include <stdexcept>
#include <string>

namespace cylbif {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series, recurrence or iteration did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Ratio evaluated too close to a zero of its denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Dispersion function evaluated at (or inside the margin of) its singular period.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// Regular radial solution vanishes at r = 1: the boundary problem has no solution.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

class TransversalityFailure : public Error {
 public:
  using Error::Error;
};

class AmplitudeError : public Error {
 public:
  using Error::Error;
};

class ResonanceContractError : public Error {
 public:
  using Error::Error;
};

class NodalCountError : public Error {
 public:
  using Error::Error;
};

/// True for the failures the CLI reports as numerical (exit code 3)
/// rather than as bad input.
inline bool is_numerical_failure(const Error& e) {
  return dynamic_cast<const ConvergenceError*>(&e) != nullptr ||
         dynamic_cast<const BracketError*>(&e) != nullptr ||
         dynamic_cast<const QuadratureError*>(&e) != nullptr ||
         dynamic_cast<const ResonanceError*>(&e) != nullptr ||
         dynamic_cast<const TransversalityFailure*>(&e) != nullptr ||
         dynamic_cast<const NodalCountError*>(&e) != nullptr ||
         dynamic_cast<const OverflowError*>(&e) != nullptr;
}

}  // namespace cylbif
