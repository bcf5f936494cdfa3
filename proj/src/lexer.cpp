#include "lexer.hpp"

#include <array>
#include <cctype>

namespace scalc::detail {

namespace {

// Longest match first.
constexpr std::array<std::string_view, 16> kMultiPunct = {
    "<->", "==", "!=", "<=", ">=", "&&", "||", "->",
    "*=",  "+=", "-=", "++", "--", "..", "//", "/*"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto span_at = [&](std::size_t start, std::size_t end) {
    return SourceSpan{start, end, line, start - line_start + 1};
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), span_at(start, i)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Int, std::string(text.substr(start, i - start)), span_at(start, i)});
      continue;
    }
    bool matched = false;
    for (auto p : kMultiPunct) {
      if (text.substr(i, p.size()) == p) {
        if (p == "/*") {
          throw Error(ErrorKind::SyntaxError, "block comments are not supported",
                      span_at(start, i + 2));
        }
        out.push_back({Tok::Punct, std::string(p), span_at(start, i + p.size())});
        i += p.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static constexpr std::string_view kSingle = ";{}()[],.=<>!+-*&|~:@";
    if (kSingle.find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), span_at(start, i + 1)});
      ++i;
      continue;
    }
    throw Error(ErrorKind::SyntaxError,
                std::string("unexpected character '") + c + "'", span_at(start, i + 1));
  }
  // End of input is reported just past the last token, not on trailing blank lines.
  if (out.empty()) {
    out.push_back({Tok::End, "", span_at(text.size(), text.size())});
  } else {
    const SourceSpan& last = out.back().span;
    out.push_back({Tok::End, "", SourceSpan{last.end, last.end, last.line, last.column + (last.end - last.start)}});
  }
  return out;
}

const Token& TokenStream::expect(std::string_view punct) {
  if (!is(punct)) fail("expected '" + std::string(punct) + "'");
  return next();
}

std::string TokenStream::expect_ident(std::string_view what) {
  if (peek().kind != Tok::Ident) fail("expected " + std::string(what));
  return next().text;
}

void TokenStream::fail(const std::string& message) const {
  const Token& t = peek();
  const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw Error(ErrorKind::SyntaxError, message + ", found " + found, t.span);
}

}  // namespace scalc::detail
