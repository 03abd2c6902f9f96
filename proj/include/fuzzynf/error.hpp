#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzynf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Attribute names that do not resolve, kind mismatches, malformed dependencies.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Input text that violates the relation format or the dependency grammar.
/// Line and column are 1-based; zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Bad argument values, e.g. a degree outside [0, 1] or an empty projection.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzynf
