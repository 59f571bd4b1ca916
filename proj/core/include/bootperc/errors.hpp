#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bootperc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the domain of the operation (n = 0, r < 1, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two vertex sets, or a set and a graph, disagree on width.
class WidthMismatch : public PreconditionError {
 public:
  WidthMismatch(std::size_t expected, std::size_t actual)
      : PreconditionError("vertex set width mismatch: expected " + std::to_string(expected) +
                          ", got " + std::to_string(actual)) {}
};

/// Malformed edge-list text or builder expression.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column = 0)
      : Error(format(message, line, column)), message_(std::move(message)), line_(line), column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// The hypothesis of a construction does not hold for the given input.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(std::string condition)
      : Error("hypothesis fails: " + condition), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// A construction produced a set that the engine could not verify.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace bootperc
