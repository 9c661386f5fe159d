#pragma once

// Recursive-descent parser shared by scalar literals and polynomial literals.

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "holant/errors.hpp"
#include "holant/rational.hpp"

namespace holant::detail {

template <typename T>
class LiteralParser {
 public:
  using AtomFn = std::function<std::optional<T>(char)>;

  LiteralParser(std::string_view text, AtomFn atom) : text_(text), atom_(std::move(atom)) {}

  T parse() {
    T value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                       std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool digit_follows(std::size_t at) {
    while (at < text_.size() && std::isspace(static_cast<unsigned char>(text_[at]))) ++at;
    return at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]));
  }

  T expr() {
    T acc;
    bool negate_first = false;
    if (peek() == '-' && !digit_follows(pos_ + 1)) {
      ++pos_;
      negate_first = true;
    }
    acc = term();
    if (negate_first) acc = T(0) - acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
      } else if (c != '(' && !std::isalpha(static_cast<unsigned char>(c))) {
        return acc;
      }
      // A letter or '(' directly after a factor multiplies: "2 a^2 b".
      acc = acc * factor();
    }
  }

  T factor() {
    T base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      base = base.pow(uint_value());
    }
    return base;
  }

  unsigned long uint_value() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Int uint_big() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  T primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      T inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = false;
      if (c == '-') {
        ++pos_;
        negative = true;
      }
      Int num = uint_big();
      Int den = 1;
      if (peek() == '/') {
        ++pos_;
        den = uint_big();
        if (den == 0) throw Error(ErrorKind::ZeroDenominator, "zero denominator in \"" + std::string(text_) + "\"");
      }
      Rat r(num, den);
      r.canonicalize();
      if (negative) r = -r;
      return T(r);
    }
    if (c != '\0') {
      if (auto v = atom_(c)) {
        ++pos_;
        return *v;
      }
      fail("unknown symbol '" + std::string(1, c) + "'");
    }
    fail("unexpected end of input");
  }

  std::string_view text_;
  AtomFn atom_;
  std::size_t pos_ = 0;
};

}  // namespace holant::detail
