#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bikehiker {

enum class ErrorCode {
  parse,
  invalid_argument,
  not_square,
  not_uniform,
  not_optimal,
  invalid_plan,
  guard_exceeded,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the matrix-file reader. line() is 1-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse,
              line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bikehiker
