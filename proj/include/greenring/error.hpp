#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greenring {

enum class ErrorCode {
  Domain,          // argument outside the mathematical domain (k = 0, n < 2, ...)
  Context,         // operands from different rings / variable arities
  Parse,           // malformed expression or file
  Integrality,     // a public result would carry a non-integer coefficient
  Precondition,    // operation precondition not met (negative constants, no involution)
  Numeric,         // iterative method failed to converge
  Presentation,    // relation image not zero when building a projection
  Format,          // malformed BasedRing file
  Unsupported,     // evaluation or conversion not defined for the input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::Parse, what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace greenring
