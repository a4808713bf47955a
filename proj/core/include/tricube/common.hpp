#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tricube {

/// Base class for all errors thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (expressions, system files). CLI exit code 2.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, int line, int col)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// An operation was called outside its stated contract. CLI exit code 3.
class precondition_error : public error {
 public:
  using error::error;
};

/// Input is valid but outside the supported scope. CLI exit code 4.
class unsupported_error : public error {
 public:
  using error::error;
};

/// Invariant violation inside the library; always a bug.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace tricube
