#pragma once

// Recursive-descent parser for field coefficients.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' ['-'] integer)*
//   atom     := rational | 'i' | 'c2' | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// 'c2' is 2^{1/3}.  Whitespace is ignored between tokens.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace hitchin3 {

namespace detail {

class CoeffParser {
 public:
  explicit CoeffParser(std::string_view text) : text_(text) {}

  FieldElem parse() {
    FieldElem value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return value;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), std::string(text_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer() {
    if (!peek_digit()) fail({"integer"});
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  FieldElem expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    FieldElem value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  FieldElem term() {
    FieldElem value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  FieldElem factor() {
    FieldElem value = atom();
    while (accept('^')) {
      bool negative = accept('-');
      std::size_t at = pos_;
      Integer e = integer();
      if (e > 4096) {
        pos_ = at;
        fail({"exponent of at most 4096"});
      }
      long long n = e.convert_to<long long>();
      if (negative && value.is_zero()) {
        pos_ = at;
        fail({"nonzero base for a negative exponent"});
      }
      value = value.pow(negative ? -n : n);
    }
    return value;
  }

  FieldElem atom() {
    skip_ws();
    if (accept('(')) {
      FieldElem inner = expr();
      if (!accept(')')) fail({"')'"});
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return FieldElem::i();
    }
    if (text_.substr(pos_, 2) == "c2") {
      pos_ += 2;
      return FieldElem::cbrt2();
    }
    if (!peek_digit()) fail({"integer", "'i'", "'c2'", "'('"});
    Integer num = integer();
    if (accept('/')) {
      std::size_t at = pos_;
      Integer den = integer();
      if (den == 0) {
        pos_ = at;
        fail({"positive integer"});
      }
      return FieldElem(Rational(num, den));
    }
    return FieldElem(Rational(num));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FieldElem parse_coeff(std::string_view expr) { return detail::CoeffParser(expr).parse(); }

}  // namespace hitchin3
