#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abmod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's contract.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exponential procedure was asked to run beyond its configured cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " +
                   what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace abmod
