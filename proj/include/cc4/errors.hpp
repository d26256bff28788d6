#pragma once

#include <stdexcept>
#include <string>

namespace cc4 {

// Length or dimension mismatch between values that must agree.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A bit string that no in-range value encodes to.
struct MalformedCodeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Text input that does not match the expected grammar.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message), line_(0), column_(0) {}

  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  // 1-based; 0 when the location is unknown.
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cc4
