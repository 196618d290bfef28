#include "ppa/detail/lexer.hpp"

#include <cctype>
#include <charconv>

#include "ppa/errors.hpp"

namespace ppa::detail {

std::vector<Token> tokenize(std::string_view text, std::vector<std::string>* comments) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      std::size_t j = i;
      while (j < text.size() && text[j] != '\n') ++j;
      if (comments) comments->emplace_back(text.substr(i, j - i));
      advance(j - i);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = TokenKind::identifier;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(c) || (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          j = k;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
      }
      t.kind = TokenKind::number;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view("+-*^()/,;={}").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = TokenKind::punct;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      throw ParseError("unexpected character", line, col, std::string(1, static_cast<char>(c)));
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = TokenKind::end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  const std::size_t p = pos_ + ahead;
  return p < tokens_.size() ? tokens_[p] : tokens_.back();
}

const Token& TokenCursor::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenCursor::accept(char c) {
  if (!peek().is(c)) return false;
  next();
  return true;
}

bool TokenCursor::accept_word(std::string_view w) {
  if (!peek().is_word(w)) return false;
  next();
  return true;
}

const Token& TokenCursor::expect(char c, std::string_view what) {
  if (!peek().is(c)) fail("expected " + std::string(what));
  return next();
}

const Token& TokenCursor::expect_identifier(std::string_view what) {
  if (peek().kind != TokenKind::identifier) fail("expected " + std::string(what));
  return next();
}

void TokenCursor::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenCursor::fail_at(const Token& token, const std::string& message) const {
  throw ParseError(message, token.line, token.column, token.kind == TokenKind::end ? "end of input" : token.text);
}

namespace {

bool is_integer_token(const Token& t) {
  return t.kind == TokenKind::number && t.text.find_first_not_of("0123456789") == std::string::npos;
}

Rational unsigned_rational(TokenCursor& cur) {
  const Token& num = cur.peek();
  if (!is_integer_token(num)) cur.fail("expected an integer or p/q literal");
  cur.next();
  std::string text = num.text;
  if (cur.peek().is('/') && cur.peek(1).kind == TokenKind::number) {
    cur.next();
    const Token& den = cur.peek();
    if (!is_integer_token(den)) cur.fail("expected denominator");
    cur.next();
    if (den.text.find_first_not_of('0') == std::string::npos) cur.fail_at(den, "zero denominator");
    text += "/" + den.text;
  }
  return parse_rational(text);
}

class ExprParser {
 public:
  ExprParser(TokenCursor& cur, const RingPtr& ring, const NameResolver& resolve)
      : cur_(cur), ring_(ring), resolve_(resolve) {}

  PolyExpr expression() {
    PolyExpr acc = ring_ ? PolyExpr(ring_, Rational(0)) : PolyExpr();
    bool negate = false;
    if (cur_.accept('-')) {
      negate = true;
    } else {
      cur_.accept('+');
    }
    PolyExpr first = term();
    acc += negate ? -first : first;
    while (true) {
      if (cur_.accept('+')) {
        acc += term();
      } else if (cur_.accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  PolyExpr term() {
    PolyExpr acc = unary();
    while (true) {
      if (cur_.accept('*')) {
        acc *= unary();
      } else if (cur_.peek().is('/')) {
        const Token& op = cur_.next();
        const PolyExpr d = unary();
        if (!d.is_constant()) cur_.fail_at(op, "can only divide by a constant");
        if (d.constant_term() == 0) cur_.fail_at(op, "division by zero");
        acc = acc.scaled(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  PolyExpr unary() {
    if (cur_.accept('-')) return -unary();
    return power();
  }

  PolyExpr power() {
    const Token& start = cur_.peek();
    PolyExpr base = primary();
    if (cur_.accept('^')) {
      Exponent e = parse_exponent(cur_);
      try {
        return pow(base, e);
      } catch (const Error& err) {
        cur_.fail_at(start, err.what());
      }
    }
    return base;
  }

  PolyExpr primary() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::number) {
      if (!is_integer_token(t)) cur_.fail("decimal literals are not exact; use p/q");
      return PolyExpr(unsigned_rational(cur_)).over(ring_);
    }
    if (t.kind == TokenKind::identifier) {
      cur_.next();
      if (ring_) {
        if (auto idx = ring_->index_of(t.text)) return PolyExpr::variable(ring_, *idx);
      }
      if (resolve_) {
        if (auto p = resolve_(t.text)) {
          if (p->is_constant()) return p->over(ring_);
          return *p;
        }
      }
      cur_.fail_at(t, "unknown identifier");
    }
    if (cur_.accept('(')) {
      PolyExpr inner = expression();
      cur_.expect(')', "')'");
      return inner;
    }
    cur_.fail("expected a polynomial expression");
  }

  TokenCursor& cur_;
  const RingPtr& ring_;
  const NameResolver& resolve_;
};

}  // namespace

PolyExpr parse_expression(TokenCursor& cursor, const RingPtr& ring, const NameResolver& resolve) {
  return ExprParser(cursor, ring, resolve).expression();
}

Rational parse_signed_rational(TokenCursor& cursor) {
  const bool neg = cursor.accept('-');
  if (!neg) cursor.accept('+');
  Rational r = unsigned_rational(cursor);
  return neg ? Rational(-r) : r;
}

// Bare exponents are integers, so x^2/4 is x^2 divided by 4; fractional and
// negative exponents need parentheses: x^(1/2), x^(-1).
Exponent parse_exponent(TokenCursor& cursor) {
  if (cursor.accept('(')) {
    const Rational r = parse_signed_rational(cursor);
    cursor.expect(')', "')' after exponent");
    return Exponent::from_rational(r);
  }
  const Token& t = cursor.peek();
  if (!is_integer_token(t)) cursor.fail("expected an integer exponent");
  cursor.next();
  return Exponent::from_rational(parse_rational(t.text));
}

double parse_float(TokenCursor& cursor) {
  const bool neg = cursor.accept('-');
  if (!neg) cursor.accept('+');
  const Token& t = cursor.peek();
  if (t.kind != TokenKind::number) cursor.fail("expected a number");
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) cursor.fail("malformed number");
  cursor.next();
  return neg ? -value : value;
}

}  // namespace ppa::detail

namespace ppa {

PolyExpr parse_poly(std::string_view text, const RingPtr& ring, const NameResolver& resolve) {
  detail::TokenCursor cursor(detail::tokenize(text));
  if (cursor.at_end()) cursor.fail("empty polynomial");
  PolyExpr p = detail::parse_expression(cursor, ring, resolve);
  if (!cursor.at_end()) cursor.fail("trailing input after polynomial");
  return p;
}

}  // namespace ppa
