// Copyright 2026 The qf2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qf2/parse.hpp"

#include <cctype>

namespace qf2 {

namespace {

class Parser {
 public:
  Parser(const FieldPtr& field, std::string_view text) : F_(field), s_(text) {}

  RatFunc parse_all() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned uint() {
    skip_ws();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return static_cast<unsigned>(v);
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+') || accept('-')) {
        acc += term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    RatFunc base = atom();
    if (accept('^')) {
      const unsigned e = uint();
      if (base.is_zero() && e == 0) return RatFunc::one(F_);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 't') {
      ++pos_;
      return RatFunc(Poly::t(F_));
    }
    if (c == 'g') {
      ++pos_;
      return RatFunc::constant(F_, F_->generator());
    }
    if (c == '0' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == 'b' || s_[pos_ + 1] == 'B')) {
      pos_ += 2;
      const std::size_t start = pos_;
      std::uint64_t bits = 0;
      while (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) {
        bits = (bits << 1) | static_cast<std::uint64_t>(s_[pos_] - '0');
        ++pos_;
        if (pos_ - start > F_->k()) {
          pos_ = start;
          fail("bit-string wider than the field degree");
        }
      }
      if (pos_ == start) fail("expected binary digits after 0b");
      return RatFunc::constant(F_, static_cast<Elem>(bits));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        --pos_;
        fail("integer constants other than 0 and 1 are not field elements");
      }
      return RatFunc::constant(F_, static_cast<Elem>(c - '0'));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  FieldPtr F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text) { return Parser(field, text).parse_all(); }

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  RatFunc r = parse_ratfunc(field, text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial, got a proper fraction", 0);
  return r.num();
}

Place parse_place(const FieldPtr& field, std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view trimmed = text.substr(b, e - b);
  if (trimmed == "inf") return Place::infinite();
  Poly p = parse_poly(field, trimmed);
  if (p.degree() < 1) throw ParseError("place must be 'inf' or a nonconstant polynomial", b);
  if (!is_irreducible(p)) throw ParseError("place polynomial " + p.to_string() + " is not irreducible", b);
  return Place::finite_unchecked(p.monic());
}

std::vector<Place> parse_place_list(const FieldPtr& field, std::string_view text) {
  std::vector<Place> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const std::string_view piece = text.substr(start, i - start);
      bool blank = true;
      for (char ch : piece)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank) {
        try {
          out.push_back(parse_place(field, piece));
        } catch (const ParseError& err) {
          throw ParseError(std::string(err.what()).substr(0, std::string(err.what()).rfind(" at position")),
                           start + err.position());
        }
      }
      start = i + 1;
    }
  }
  return out;
}

}  // namespace qf2
