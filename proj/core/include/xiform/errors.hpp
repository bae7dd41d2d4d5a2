#pragma once

#include <stdexcept>
#include <string>

namespace xiform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characteristic 2, a non-prime modulus, or a field an operation cannot handle.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class NoOddBlock : public Error {
 public:
  using Error::Error;
};

/// Every admissible shift makes the pencil singular over a small finite field.
class GammaExhausted : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Thrown when an internally asserted postcondition fails. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void throw_internal(const std::string& what);

}  // namespace xiform
