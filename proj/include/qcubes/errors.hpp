#pragma once

#include <stdexcept>
#include <string>

namespace qcubes {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

/// The divisor does not divide the dividend exactly.
class NonzeroRemainder : public Error {
 public:
  using Error::Error;
};

/// A rational function that was expected to be a polynomial has a pole.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class PointOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace qcubes
