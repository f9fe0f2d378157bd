#pragma once

// Polynomial expressions in x, e.g. "binom(x+2,2)", "x^2 + x + 5/4",
// "(2x+1)*(x^2+x+1/2)". Grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'x' | '(' expr ')' | 'binom' '(' expr ',' integer ')'
//
// Division is only by nonzero constants. Whitespace is ignored.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"

namespace ehrmagic {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(' || c == 'b';
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_integer() {
    Integer z = integer();
    if (z > 4096) fail("exponent or binomial degree too large");
    return static_cast<unsigned>(z.get_ui());
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial den = unary();
        if (den.is_zero() || *den.degree() != 0) fail("division only by nonzero constants");
        acc /= den.leading();
      } else if (starts_primary()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) return ehrmagic::pow(base, small_integer());
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(Rational(integer()));
    if (c == 'x') {
      ++pos_;
      return Polynomial::x();
    }
    if (accept('(')) {
      Polynomial p = expr();
      expect(')');
      return p;
    }
    if (text_.substr(pos_, 5) == "binom") {
      pos_ += 5;
      expect('(');
      Polynomial arg = expr();
      expect(',');
      unsigned d = small_integer();
      expect(')');
      return binomial_of(arg, d);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace ehrmagic
