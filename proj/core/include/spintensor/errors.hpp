#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spintensor {

//! Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Index value out of range or slot/family/variance mismatch.
class SignatureError : public Error {
public:
  using Error::Error;
};

//! Scalar arithmetic outside the realization's domain (division by zero,
//! exact square root of a non-square, metric with wrong signature).
class RepresentationError : public Error {
public:
  using Error::Error;
};

//! Expression text rejected by the parser; carries the byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

//! Expression evaluation failed at a concrete point.
class EvalError : public Error {
public:
  using Error::Error;
};

//! Frame or transform matrix is singular (or nearly so) at a point.
class DegeneracyError : public Error {
public:
  using Error::Error;
};

//! Equipment violates one of its defining identities beyond tolerance.
class InconsistencyError : public Error {
public:
  using Error::Error;
};

//! Malformed scene configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace spintensor
