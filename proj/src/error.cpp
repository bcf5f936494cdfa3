#include "scalc/error.hpp"

namespace scalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::EmptyDomain: return "EmptyDomain";
    case ErrorKind::InvalidDomain: return "InvalidDomain";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ValueNotInDomain: return "ValueNotInDomain";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnboundSymbol: return "UnboundSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnboundStateVariable: return "UnboundStateVariable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::UnsupportedForExport: return "UnsupportedForExport";
    case ErrorKind::SpecFileError: return "SpecFileError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     const std::optional<SourceSpan>& span) {
  std::string out(to_string(kind));
  if (span) {
    out += " at " + std::to_string(span->line) + ":" +
           std::to_string(span->column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<SourceSpan> span)
    : std::runtime_error(decorate(kind, message, span)),
      kind_(kind),
      span_(span),
      message_(message) {}

Error Error::shifted(std::size_t lines) const {
  std::optional<SourceSpan> span = span_;
  if (span) span->line += lines;
  return Error(kind_, message_, span);
}

}  // namespace scalc
