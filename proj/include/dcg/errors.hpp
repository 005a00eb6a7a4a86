#pragma once

#include <stdexcept>
#include <string>

namespace dcg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The edge map is not total, has a self-loop, or names an unknown vertex.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion fired. On valid inputs this never happens.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (dcg-v1, cert-v1, color literals, flag values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcg
