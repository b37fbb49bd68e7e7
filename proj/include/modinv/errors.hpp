#pragma once

#include <stdexcept>
#include <string>

namespace modinv {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in F_p") {}
};

class PrimeMismatch : public Error {
 public:
  PrimeMismatch(unsigned a, unsigned b)
      : Error("prime mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when a result that must hold by construction does not.
class InternalError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InfiniteQuotient : public Error {
 public:
  using Error::Error;
};

class IterationLimit : public Error {
 public:
  using Error::Error;
};

class UnknownTarget : public Error {
 public:
  using Error::Error;
};

}  // namespace modinv
