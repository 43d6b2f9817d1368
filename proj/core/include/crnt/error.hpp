#ifndef CRNT_ERROR_HPP
#define CRNT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crnt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed network, translation or value file.  Line and column are 1-based;
/// zero means "not known".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// An object violates a structural invariant (self-reaction, unknown species, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix sizes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration bound was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A candidate translation violates one of the three defining conditions.
class TranslationError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold (not weakly reversible, nonzero
/// deficiency, not resolvable, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Request that the library deliberately does not support.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace crnt

#endif
