#pragma once

#include <stdexcept>
#include <string>

namespace affwt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (type strings, monomials, words, wall rows).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Affine type or rank outside the supported families.
class UnsupportedTypeError : public Error {
 public:
  using Error::Error;
};

/// A node index outside I = {0, ..., n}.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// The monomial is not an element of the crystal the operation expects.
class NotInCrystalError : public Error {
 public:
  using Error::Error;
};

/// A difference system a_i - a_{i-1} = c_i on the cycle with sum(c) != 0.
class InconsistentSystemError : public NotInCrystalError {
 public:
  using NotInCrystalError::NotInCrystalError;
};

/// 64-bit exponent arithmetic wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// remove_delta requested on a column without a removable delta.
class NoRemovableDeltaError : public Error {
 public:
  using Error::Error;
};

/// Two discovery paths disagree on a node statistic during BFS.
class PathInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant (properness after f, ...) was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace affwt
