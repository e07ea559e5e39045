#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "gw/errors.hpp"
#include "gw/exactalg/rational.hpp"

namespace gw {

// Recursive-descent reader for ring expressions: + - * ^, rational literals, parentheses,
// implicit multiplication between adjacent factors. The builder supplies the algebra:
//   Value variable(std::string_view, std::size_t), Value constant(const Rational&),
//   Value add(Value, Value), Value mul(Value, Value), Value neg(Value), Value pow(Value, int)
template <class Builder>
class ExpressionParser {
 public:
  using Value = typename Builder::Value;

  ExpressionParser(std::string_view text, Builder& b) : s_(text), b_(b) {}

  Value parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  std::string_view s_;
  Builder& b_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
  }
  static bool ident_char(char c) {
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || ident_start(c);
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = b_.add(v, term());
      } else if (peek('-')) {
        ++pos_;
        v = b_.add(v, b_.neg(term()));
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = b_.mul(v, unary());
      } else if (peek('/')) {
        ++pos_;
        skip();
        std::size_t at = pos_;
        Rational d = integer_literal();
        if (d == 0) throw ParseError("division by zero", at);
        v = b_.mul(v, b_.constant(Rational(1) / d));
      } else if (starts_factor()) {
        v = b_.mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      return b_.neg(unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value v = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      Rational e = integer_literal();
      if (e.get_den() != 1 || e > 100000) throw ParseError("bad exponent", at);
      v = b_.pow(v, static_cast<int>(e.get_num().get_si()));
    }
    return v;
  }

  Rational integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Rational(mpz_class(std::string(s_.substr(start, pos_ - start))));
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q = integer_literal();
      // "3/2" directly after a literal is a rational literal
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::size_t at = pos_;
        Rational d = integer_literal();
        if (d == 0) throw ParseError("division by zero", at);
        q /= d;
      }
      return b_.constant(q);
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      return b_.variable(s_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace gw
