#ifndef ARTIN_DETAIL_SCAN_HPP
#define ARTIN_DETAIL_SCAN_HPP

#include <artin/error.hpp>
#include <artin/integer.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace artin::detail {

// Characters with syntactic meaning in one of the text formats.
inline bool is_reserved(char c) noexcept {
  switch (c) {
    case '^': case '(': case ')': case ',': case '@': case '#': case ':':
    case '=':
      return true;
    default:
      return false;
  }
}

inline bool is_name_char(char c) noexcept {
  return !std::isspace(static_cast<unsigned char>(c)) && !is_reserved(c);
}

inline bool is_valid_name(std::string_view name) noexcept {
  if (name.empty()) {
    return false;
  }
  for (char c : name) {
    if (!is_name_char(c)) {
      return false;
    }
  }
  return true;
}

// Cursor over a text buffer that tracks 1-based line/column positions.
class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t line = 1,
                   std::size_t column = 1)
      : _text(text), _line(line), _column(column) {}

  bool eof() const noexcept { return _pos >= _text.size(); }
  char peek() const noexcept { return eof() ? '\0' : _text[_pos]; }
  std::size_t line() const noexcept { return _line; }
  std::size_t column() const noexcept { return _column; }

  char get() {
    char c = _text[_pos++];
    if (c == '\n') {
      ++_line;
      _column = 1;
    } else {
      ++_column;
    }
    return c;
  }

  void skip_blanks() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      get();
    }
  }

  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) {
      get();
    }
  }

  [[noreturn]] void fail(std::string const& message) const {
    throw ParseError(message, _line, _column);
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(std::string("expected '") + c + "'"
           + (eof() ? std::string(", found end of input")
                    : std::string(", found '") + peek() + "'"));
    }
    get();
  }

  bool accept(char c) {
    if (!eof() && peek() == c) {
      get();
      return true;
    }
    return false;
  }

  std::string read_name() {
    std::string out;
    while (!eof() && is_name_char(peek())) {
      out.push_back(get());
    }
    if (out.empty()) {
      fail(eof() ? "expected a vertex name, found end of input"
                 : std::string("expected a vertex name, found '") + peek()
                       + "'");
    }
    return out;
  }

  // Optionally signed decimal integer.
  Integer read_integer() {
    std::string digits;
    if (peek() == '-' || peek() == '+') {
      if (get() == '-') {
        digits.push_back('-');
      }
    }
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(get());
    }
    if (digits.empty() || digits == "-") {
      fail("expected an integer");
    }
    // cpp_int reads a leading zero as an octal prefix
    std::size_t first = digits[0] == '-' ? 1 : 0;
    while (first + 1 < digits.size() && digits[first] == '0') {
      digits.erase(first, 1);
    }
    return Integer(digits);
  }

 private:
  std::string_view _text;
  std::size_t _pos = 0;
  std::size_t _line;
  std::size_t _column;
};

}  // namespace artin::detail

#endif
