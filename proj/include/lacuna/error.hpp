#pragma once

#include <stdexcept>
#include <string>

namespace lacuna {

enum class ErrorKind {
  kInvalidSpec,
  kLoopEdge,
  kDuplicateEdge,
  kDisconnected,
  kBadSink,
  kBadVertex,
  kParse,
  kUnstable,
  kPrecondition,
  kBudget,
  kSizeCap,
  kNoConvergence,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the text parsers; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::kParse, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lacuna
