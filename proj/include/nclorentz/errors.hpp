#pragma once

#include <stdexcept>
#include <string>

namespace nclorentz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter carrying a negative exponent was bound to zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A contraction limit does not exist; the message lists the offending terms.
class DivergentLimit : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

/// Operands live over different Lie algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

/// The chart Jacobian of the invariant vector fields is numerically singular.
class SingularChart : public Error {
 public:
  using Error::Error;
};

class NonTermination : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nclorentz
