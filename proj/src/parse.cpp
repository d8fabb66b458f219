#include "holo/parse.hpp"

#include <cctype>

#include "holo/error.hpp"

namespace holo {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  UniPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    UniPoly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected '" + std::string(1, peek()) + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  UniPoly expr() {
    UniPoly acc = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      UniPoly rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  UniPoly term() {
    UniPoly acc = unary();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        UniPoly d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d.leading();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  UniPoly unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  UniPoly power() {
    UniPoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (peek() == '-') throw ParseError("negative exponent", at);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("exponent must be a nonnegative integer", at);
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == '/') throw ParseError("non-integer exponent", at);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) throw ParseError("exponent too large", at);
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  UniPoly primary() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      UniPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '.') throw ParseError("floating-point literals are not supported", pos_);
      return UniPoly::constant(Rational(Integer(std::string(text_.substr(at, pos_ - at)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string_view name = text_.substr(at, pos_ - at);
      if (name != var_)
        throw ParseError("unknown variable '" + std::string(name) + "' (expected '" + std::string(var_) + "')", at);
      if (peek() == '(') throw ParseError("function calls are not supported", pos_);
      return UniPoly::monomial(1);
    }
    if (at_end()) throw ParseError("unexpected end of input", at);
    throw ParseError("unexpected '" + std::string(1, c) + "'", at);
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_poly(std::string_view text, std::string_view var) { return Parser(text, var).run(); }

}  // namespace holo
