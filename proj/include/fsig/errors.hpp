#ifndef FSIG_ERRORS_HPP
#define FSIG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsig {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 0-based character offset into the
/// parsed string; `line`/`column` are 1-based and only set for file input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position,
             std::size_t line = 0, std::size_t column = 0)
      : Error(what), position_(position), line_(line), column_(column) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t position_;
  std::size_t line_;
  std::size_t column_;
};

/// A mathematical precondition failed (non-prime modulus, u in I, socle
/// dimension != 1, a containment of the Q-Gorenstein data, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A configured cap (basis size, degree, exponent) was exceeded.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// Arithmetic misuse: division by zero, ring mismatch, dimension mismatch.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An internal consistency assertion failed. Always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace fsig

#endif  // FSIG_ERRORS_HPP
