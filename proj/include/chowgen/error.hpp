#pragma once

#include <stdexcept>
#include <string>

namespace chowgen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A series was not computed to a high enough degree for the request.
class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

/// Input to symmetric reduction is not invariant under a root transposition.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A degree slice exceeds the configured resource guard. Never an approximation.
class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant, e.g. an inexact division in a Chern coefficient.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowgen
