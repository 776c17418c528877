#include <cctype>
#include <string>

#include "unirow/errors.hpp"
#include "unirow/ring.hpp"

namespace unirow {

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

enum class TokenKind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t position;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      return {TokenKind::End, {}, start};
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return {TokenKind::Number, text_.substr(start, pos_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      return {TokenKind::Ident, text_.substr(start, pos_ - start), start};
    }
    ++pos_;
    switch (c) {
      case '+': return {TokenKind::Plus, text_.substr(start, 1), start};
      case '-': return {TokenKind::Minus, text_.substr(start, 1), start};
      case '*': return {TokenKind::Star, text_.substr(start, 1), start};
      case '^': return {TokenKind::Caret, text_.substr(start, 1), start};
      case '/': return {TokenKind::Slash, text_.substr(start, 1), start};
      case '(': return {TokenKind::LParen, text_.substr(start, 1), start};
      case ')': return {TokenKind::RParen, text_.substr(start, 1), start};
      default: break;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const Variables& variables)
      : lexer_(text), variables_(variables) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expression();
    if (current_.kind != TokenKind::End) {
      unexpected();
    }
    return p;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  [[noreturn]] void unexpected() const {
    if (current_.kind == TokenKind::End) {
      throw SyntaxError("unexpected end of input", current_.position);
    }
    throw SyntaxError("unexpected '" + std::string(current_.text) + "'", current_.position);
  }

  Polynomial expression() {
    Polynomial p = term();
    while (current_.kind == TokenKind::Plus || current_.kind == TokenKind::Minus) {
      const bool minus = current_.kind == TokenKind::Minus;
      advance();
      Polynomial rhs = term();
      if (minus) {
        p -= rhs;
      } else {
        p += rhs;
      }
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (current_.kind == TokenKind::Star) {
        advance();
        p = p * factor();
      } else if (current_.kind == TokenKind::Number || current_.kind == TokenKind::Ident ||
                 current_.kind == TokenKind::LParen) {
        throw SyntaxError("implicit multiplication is not allowed, use '*'", current_.position);
      } else if (current_.kind == TokenKind::Slash) {
        throw SyntaxError("'/' is only allowed inside rational literals", current_.position);
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    if (current_.kind == TokenKind::Minus) {
      advance();
      return -factor();
    }
    if (current_.kind == TokenKind::Plus) {
      advance();
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (current_.kind != TokenKind::Caret) {
      return base;
    }
    advance();
    if (current_.kind != TokenKind::Number) {
      throw SyntaxError("exponent must be a non-negative integer literal", current_.position);
    }
    const BigInt e(std::string(current_.text), 10);
    if (e > kMaxExponent) {
      throw SyntaxError("exponent too large", current_.position);
    }
    advance();
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial primary() {
    switch (current_.kind) {
      case TokenKind::Number: {
        BigInt num(std::string(current_.text), 10);
        advance();
        BigInt den = 1;
        if (current_.kind == TokenKind::Slash) {
          advance();
          if (current_.kind != TokenKind::Number) {
            throw SyntaxError("expected denominator", current_.position);
          }
          den = BigInt(std::string(current_.text), 10);
          if (den == 0) {
            throw SyntaxError("zero denominator", current_.position);
          }
          advance();
        }
        return Polynomial::constant(variables_, make_rational(num, den));
      }
      case TokenKind::Ident: {
        const auto index = variables_.index_of(current_.text);
        if (!index) {
          throw SyntaxError("unknown variable '" + std::string(current_.text) + "'",
                            current_.position);
        }
        advance();
        return Polynomial::variable(variables_, *index);
      }
      case TokenKind::LParen: {
        advance();
        Polynomial inner = expression();
        if (current_.kind != TokenKind::RParen) {
          throw SyntaxError("expected ')'", current_.position);
        }
        advance();
        return inner;
      }
      default:
        unexpected();
    }
  }

  Lexer lexer_;
  const Variables& variables_;
  Token current_{TokenKind::End, {}, 0};
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  if (offset) {
    *offset += b;
  }
  return s.substr(b, e - b);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& variables) {
  return Parser(text, variables).parse();
}

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') {
      ++depth;
    } else if (text[k] == ')') {
      --depth;
    } else if (text[k] == separator && depth == 0) {
      parts.emplace_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.emplace_back(text.substr(start));
  return parts;
}

Ring parse_ring(std::string_view spec, MonomialOrder order) {
  std::size_t offset = 0;
  const std::string_view s = trim(spec, &offset);
  if (s == "Z") {
    return Ring::integers();
  }
  if (s == "Q") {
    return Ring::rationals();
  }
  if (s.size() < 3 || (s[0] != 'Q' && s[0] != 'Z') || s[1] != '[') {
    throw SyntaxError("expected Z, Q, Q[...] or Q[...]/(...)", offset);
  }
  const auto close = s.find(']');
  if (close == std::string_view::npos) {
    throw SyntaxError("missing ']'", offset + s.size());
  }
  std::vector<std::string> names;
  std::size_t var_offset = offset + 2;
  for (const auto& raw : split_top_level(s.substr(2, close - 2))) {
    std::size_t local = var_offset;
    const auto name = trim(raw, &local);
    if (!is_identifier(name)) {
      throw SyntaxError("invalid variable name '" + std::string(name) + "'", local);
    }
    for (const auto& existing : names) {
      if (existing == name) {
        throw SyntaxError("duplicate variable '" + std::string(name) + "'", local);
      }
    }
    names.emplace_back(name);
    var_offset += raw.size() + 1;
  }

  std::size_t rest_offset = offset + close + 1;
  const std::string_view rest = trim(s.substr(close + 1), &rest_offset);
  if (rest.empty()) {
    if (s[0] == 'Z') {
      Ring ring = Ring::integers();
      for (const auto& name : names) {
        ring = ring.extend_with_variable(name);
      }
      return ring;
    }
    return Ring::polynomials(std::move(names), order);
  }
  if (s[0] == 'Z') {
    throw SyntaxError("quotients are only supported over Q", rest_offset);
  }
  if (rest[0] != '/') {
    throw SyntaxError("expected '/' before the modulus", rest_offset);
  }
  std::size_t mod_offset = rest_offset + 1;
  const std::string_view mod = trim(rest.substr(1), &mod_offset);
  if (mod.size() < 2 || mod.front() != '(' || mod.back() != ')') {
    throw SyntaxError("modulus must be written as (poly)", mod_offset);
  }
  const Variables vars(names);
  Polynomial modulus;
  try {
    modulus = parse_polynomial(mod.substr(1, mod.size() - 2), vars);
  } catch (const SyntaxError& e) {
    // re-anchor the position to the full ring spec
    const std::string msg = e.what();
    throw SyntaxError(msg.substr(0, msg.rfind(" at position")),
                      e.position() + mod_offset + 1);
  }
  return Ring::quotient(std::move(names), modulus, order);
}

}  // namespace unirow
