#pragma once

#include <stdexcept>
#include <string>

namespace monotop {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable universes, or a monomial mentions
/// a variable outside its universe.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale budget (faces, resolutions, star-product factors, search
/// size) would be exceeded. Not a mathematical error.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed `.ideal` / `.graph` input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// An elementary collapse whose free-pair precondition fails.
class InvalidCollapse : public Error {
 public:
  using Error::Error;
};

/// Should never happen; signals a bug in a plan producer.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace monotop
