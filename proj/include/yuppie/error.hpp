#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace yuppie {

enum class ErrorKind {
  TypeMismatch,
  UnresolvedHole,
  BadPhase,
  UnknownMacro,
  ArityError,
  IllTyped,
  NotLiftable,
  NotInhabited,
  GarbageUninhabited,
  NotClassical,
  EmptyCodomain,
  BadState,
  UnboundVariable,
  BranchMismatch,
  DuplicateVariable,
  ContextShape,
  ParseError,
  UnknownDefinition,
  RecursiveDefinition,
  Io,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; `kind()` is the
// machine-readable category that the CLI forwards in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::ParseError, message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace yuppie
