#pragma once

#include <stdexcept>
#include <string>

namespace ricopoly {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IndexRangeError : Error {
  using Error::Error;
};

// A lambda coefficient consulted by a recurrence step is zero.
struct ZeroLambdaError : Error {
  using Error::Error;
};

// A closed-form coefficient rule was evaluated at a pole of its denominator.
struct PoleError : Error {
  using Error::Error;
};

// Co-dilating at level 0 never changes any generated polynomial.
struct VacuousPerturbationError : Error {
  using Error::Error;
};

// No candidate index convention reproduced the direct-recurrence oracle.
struct CalibrationError : Error {
  using Error::Error;
};

struct DegenerateHomographyError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

struct NonconvergenceError : Error {
  using Error::Error;
};

struct SingularSystemError : Error {
  using Error::Error;
};

struct NotAChainSequenceError : Error {
  using Error::Error;
};

struct BlowUpError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace ricopoly
