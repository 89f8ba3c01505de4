#ifndef ARTIN_ERROR_HPP
#define ARTIN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

/// Malformed text input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column)
                           + ": " + message),
        _message(message),
        _line(line),
        _column(column) {}

  std::string const& message() const noexcept { return _message; }
  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

 private:
  std::string _message;
  std::size_t _line;
  std::size_t _column;
};

/// A precondition of an operation was violated by its arguments.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result contradicts a proven invariant. Indicates a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace artin

#endif
