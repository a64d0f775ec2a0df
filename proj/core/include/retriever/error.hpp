#pragma once

#include <stdexcept>
#include <string>

namespace retriever {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor shapes do not line up (messages report both shapes).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration values (vocab too small, bad pool size, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An API precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// An id or index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A sequence exceeds the configured maximum length.
class LengthError : public Error {
 public:
  using Error::Error;
};

// A file could not be parsed or failed validation; message names the
// offending path/location.
class LoadError : public Error {
 public:
  using Error::Error;
};

// A non-finite value (NaN/Inf) appeared where only finite math is allowed.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Training aborted (e.g. non-finite loss); message carries the diagnostic.
class TrainError : public Error {
 public:
  using Error::Error;
};

}  // namespace retriever
