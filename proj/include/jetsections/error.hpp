#pragma once

#include <stdexcept>
#include <string>

namespace jetsections {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller handed in a value that violates an operation's precondition
/// (bad staircase, mismatched variable spaces, malformed input text).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different variable spaces.
class SpaceMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A computed identity or structural check did not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetsections
