#pragma once

#include <stdexcept>
#include <string>

namespace gframe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or indices that do not fit together (block sizes, vector lengths,
/// signatures, erasure masks).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A numerical hypothesis of an operation does not hold for its input
/// (e.g. a system is not projective, a block is rank deficient).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The frame operator of the input is not invertible within tolerance.
class NotAnRsError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed serialized input. The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gframe
