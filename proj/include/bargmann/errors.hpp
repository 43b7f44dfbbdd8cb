#pragma once

#include <stdexcept>
#include <string>

namespace bargmann {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent arguments (dimension mismatch, bad order, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (points files, configs, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its mathematical domain, e.g. an exponent p not in (1, inf).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The growth gate rejected an integral that would not converge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A truncated computation failed its own convergence estimate.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not available for this input.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace bargmann
