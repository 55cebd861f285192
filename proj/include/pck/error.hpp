#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (arity mismatch, ill-defined map,
/// non-Poisson ideal, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

/// Two scalars carry different square-root extensions.
class FieldError : public MathError {
 public:
  using MathError::MathError;
};

/// Position in script text; 1-based line and column.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Lexical, syntax, or resolution error in a script.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourcePos pos)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
              ": " + message),
        pos_(pos),
        message_(message) {}

  SourcePos pos() const { return pos_; }
  const std::string& bare_message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

}  // namespace pck
