// SPDX-License-Identifier: Apache-2.0
#include "pfint/parse.hpp"

#include <cctype>

namespace pfint {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    BiPoly r = expr();
    skip_ws();
    if (!at_end()) unexpected();
    return r;
  }

 private:
  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc *= factor();
    }
  }

  BiPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    BiPoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("exponent must be a natural number", start);
    unsigned long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (e > kMaxExponent) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return b.pow(static_cast<unsigned>(e));
  }

  BiPoly base() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') unknown_identifier(pos_ - 1);
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') unknown_identifier(pos_);
    unexpected();
  }

  BiPoly rational() {
    Int num = digits();
    skip_ws();
    if (peek() != '/') return BiPoly(Rat(num));
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a positive integer denominator", at);
    Int den = digits();
    if (den == 0) throw ParseError("zero denominator", at);
    return BiPoly(Rat(num, den));
  }

  Int digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Int(std::string(s_.substr(start, pos_ - start)), 10);
  }

  [[noreturn]] void unknown_identifier(std::size_t at) {
    std::size_t end = at;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    throw ParseError("unknown variable '" + std::string(s_.substr(at, end - at)) + "'", at);
  }

  [[noreturn]] void unexpected() {
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view src) { return Parser(src).run(); }

}  // namespace pfint
