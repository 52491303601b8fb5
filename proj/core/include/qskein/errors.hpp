#pragma once

#include <stdexcept>
#include <string>

namespace qskein {

/// Base of every error raised by the library. Each subclass names one
/// precondition or algebraic failure so callers can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class EmptyWindow : public Error {
 public:
  using Error::Error;
};

class NonUnitLeading : public Error {
 public:
  using Error::Error;
};

class ZeroSeries : public Error {
 public:
  using Error::Error;
};

class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

class ExponentNotMultipleOf4 : public Error {
 public:
  using Error::Error;
};

}  // namespace qskein
