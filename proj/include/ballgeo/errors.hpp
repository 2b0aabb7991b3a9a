#pragma once

#include <stdexcept>
#include <string>

namespace ballgeo {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a numeric argument failed (negative radius, reversed interval, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two arguments belong to different model spaces.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

/// An interval-union set was combined with an epsilon-net set.
class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation is not available for this model or descriptor.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A group enumeration bound cannot certify the requested answer.
class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (numbers, scenario files, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ballgeo
