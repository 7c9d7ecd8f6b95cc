#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracrsv {

enum class ErrorKind {
  InvalidOrder,
  InvalidGrid,
  InvalidArgument,
  NonFiniteState,
  GridMismatch,
  NoEndemicRoot,
  DegenerateSignal,
  UnknownColumn,
  IoError,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every module reports failures through this type; `kind()` lets callers
/// (the CLI in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fracrsv
