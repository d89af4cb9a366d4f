#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace devlab {

enum class ErrorCode {
  InvalidPath,
  AlreadyNormal,
  Syntax,
  LimitExceeded,
  Cycle,
  BadArgument,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Byte offsets into the input text, start <= end.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceSpan span)
      : Error(ErrorCode::Syntax, message), span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace devlab
