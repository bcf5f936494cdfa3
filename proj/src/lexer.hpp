#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scalc/error.hpp"

namespace scalc::detail {

enum class Tok {
  Ident,
  Int,
  Punct,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span{};
};

/// Splits source text into identifiers, unsigned integer literals and
/// punctuation. `//` comments and whitespace are skipped.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with the small helpers every parser here needs.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is(std::string_view punct) const {
    return peek().kind == Tok::Punct && peek().text == punct;
  }
  bool is_keyword(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }
  bool accept(std::string_view punct) {
    if (!is(punct)) return false;
    next();
    return true;
  }
  const Token& expect(std::string_view punct);
  std::string expect_ident(std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;

  std::size_t mark() const { return pos_; }
  void reset(std::size_t mark) { pos_ = mark; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace scalc::detail
