#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scalc {

/// Location of a syntax element in its source text. Offsets are bytes,
/// line and column are 1-based.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class ErrorKind {
  SpaceTooLarge,
  EmptyDomain,
  InvalidDomain,
  IndexOutOfRange,
  ValueNotInDomain,
  UnknownVariable,
  UnboundSymbol,
  ArityMismatch,
  UnboundStateVariable,
  SyntaxError,
  UndeclaredVariable,
  SpaceMismatch,
  UnknownLaw,
  UnsupportedForExport,
  SpecFileError,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

  /// Same error with its span moved down by `lines`, for text embedded in a
  /// larger file.
  Error shifted(std::size_t lines) const;

 private:
  ErrorKind kind_;
  std::optional<SourceSpan> span_;
  std::string message_;
};

}  // namespace scalc
