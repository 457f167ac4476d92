// error.hpp -- exception types shared by all modules

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton data (a violated structural invariant).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow a grammar; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A construction or search would exceed a configured size limit.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace omega
