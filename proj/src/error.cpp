#include "fracrsv/error.hpp"

namespace fracrsv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NonFiniteState: return "non-finite-state";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::NoEndemicRoot: return "no-endemic-root";
    case ErrorKind::DegenerateSignal: return "degenerate-signal";
    case ErrorKind::UnknownColumn: return "unknown-column";
    case ErrorKind::IoError: return "io-error";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "error";
}

}  // namespace fracrsv
