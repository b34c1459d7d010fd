#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

// Base of every error the library raises. `code()` is the machine-readable
// tag reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input, or input violating a type invariant (ad - bc != 1, ...).
class InputError : public Error {
  using Error::Error;
};

// An operation was called outside its domain.
class DomainError : public Error {
  using Error::Error;
};

// A self-check failed. Always an implementation bug.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& message)
      : Error("InternalInconsistency", message) {}
};

class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& message) : InputError("ParseError", message) {}
};

class NotUnimodular : public InputError {
 public:
  NotUnimodular() : InputError("NotUnimodular", "group element requires ad - bc = 1") {}
};

class NotOnUnitQuadric : public InputError {
 public:
  NotOnUnitQuadric() : InputError("NotOnUnitQuadric", "K_C element requires a^2 + b^2 = 1") {}
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("DivisionByZero", "division by zero") {}
};

class Singular : public DomainError {
 public:
  Singular() : DomainError("Singular", "matrix is singular") {}
};

#define JACOBI_DOMAIN_ERROR(Name)                                            \
  class Name : public DomainError {                                          \
   public:                                                                   \
    explicit Name(const std::string& message) : DomainError(#Name, message) {} \
  };

JACOBI_DOMAIN_ERROR(NotNilpotent)
JACOBI_DOMAIN_ERROR(ZeroElement)
JACOBI_DOMAIN_ERROR(NotATriple)
JACOBI_DOMAIN_ERROR(NotKsReal)
JACOBI_DOMAIN_ERROR(NotNilpotentLabel)
JACOBI_DOMAIN_ERROR(UnknownSetId)
JACOBI_DOMAIN_ERROR(NotInDomain)

#undef JACOBI_DOMAIN_ERROR

}  // namespace jacobi
