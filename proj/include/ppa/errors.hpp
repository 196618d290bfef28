#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppa {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VariableSetError : public Error {
 public:
  using Error::Error;
};

class SingularMapError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class DegenerateCasimirError : public Error {
 public:
  using Error::Error;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Syntax or resolution error in polynomial text or a model file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
              (token.empty() ? std::string() : " near '" + token + "'")),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace ppa
