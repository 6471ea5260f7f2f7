#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superdom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in Grassmann algebras of different rank.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands live over different coordinate superspaces.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

/// A point is outside a domain, or a declared denominator vanishes on it.
class DomainError : public Error {
 public:
  using Error::Error;
};

class RankCapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace superdom
