#pragma once

#include <stdexcept>
#include <string>

namespace hyperbolic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : "") + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Well-formed input that violates a combinatorial invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A shape or point outside the domain of a geometric operation.
class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperbolic
