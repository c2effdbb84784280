#pragma once

#include <stdexcept>
#include <string>

namespace colax {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arrow endpoints do not match (e.g. composing f: A->B with g: C->D, B != C).
class EndpointError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation (unit 1-cell, unknown cell id, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A composite or value would be needed beyond the truncation bound.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-commuting square, invalid icon, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal coherence failed; indicates a divisibility or coherence violation in the input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace colax
