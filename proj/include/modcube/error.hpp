#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modcube {

enum class ErrorKind {
  Syntax,
  IndexOutOfRange,
  AxisNotPresent,
  AxisAlreadyPresent,
  NotComposable,
  ModeMismatch,
  OrderingViolation,
  NonSymmetricMode,
  TranspositionOutOfRange,
  ChainMismatch,
  ShapeMismatch,
  ArityViolation,
  UnknownWorld,
  Io,
};

const char* to_string(ErrorKind kind);

/// Domain error raised by every engine module. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error carrying the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Syntax,
              "syntax error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace modcube
