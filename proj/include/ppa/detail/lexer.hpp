#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ppa/polynomial.hpp"

namespace ppa::detail {

enum class TokenKind { identifier, number, punct, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is(char c) const { return kind == TokenKind::punct && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return kind == TokenKind::identifier && text == w; }
};

/// Splits text into identifiers, numbers (integers or decimal floats) and
/// single-character punctuation. `#` starts a comment running to end of line;
/// comment lines are collected into `comments` when non-null.
std::vector<Token> tokenize(std::string_view text, std::vector<std::string>* comments = nullptr);

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::end; }
  bool accept(char c);
  bool accept_word(std::string_view w);
  const Token& expect(char c, std::string_view what);
  const Token& expect_identifier(std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// polyexpr := ['+'|'-'] term (('+'|'-') term)*, with `^` exponents that are
/// integers or p/q (optionally negative, optionally parenthesised).
PolyExpr parse_expression(TokenCursor& cursor, const RingPtr& ring, const NameResolver& resolve);

/// INT or INT/INT with an optional leading '-'.
Rational parse_signed_rational(TokenCursor& cursor);

/// Exponent literal as accepted after '^'.
Exponent parse_exponent(TokenCursor& cursor);

/// Integer, decimal or scientific literal with an optional leading sign.
double parse_float(TokenCursor& cursor);

}  // namespace ppa::detail
