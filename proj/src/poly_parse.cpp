// Copyright 2026 The liepoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Recursive-descent parser for integer polynomial expressions.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' digits]
//   primary := digits | 'x' | 'y' | 'z' | '(' expr ')'

#include <cctype>

#include "liepoly/error.hpp"
#include "liepoly/polycore.hpp"

namespace liepoly {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : s_(text), nvars_(nvars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' || c == 'z';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc(nvars_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MultiPoly t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      const std::string e = digits();
      if (e.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      const std::size_t idx = static_cast<std::size_t>(c - 'x');
      if (idx >= nvars_) fail(std::string("variable ") + c + " not available");
      ++pos_;
      return MultiPoly::variable(nvars_, idx);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(nvars_, Integer(digits()));
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t nvars) { return Parser(text, nvars).parse(); }

}  // namespace liepoly
