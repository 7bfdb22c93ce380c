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

#ifndef QF2_PARSE_HPP
#define QF2_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qf2/arith.hpp"

namespace qf2 {

/// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := '(' expr ')' | 't' | 'g' | '0b' bits | '0' | '1'
// 'g' is the declared generator of GF(2^k), a bit-string gives the
// coordinates of a field element in the power basis.

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text);
/// Like parse_ratfunc but rejects a nontrivial denominator.
Poly parse_poly(const FieldPtr& field, std::string_view text);
/// "inf" or a monic-izable irreducible polynomial.
Place parse_place(const FieldPtr& field, std::string_view text);
/// Comma-separated list of places.
std::vector<Place> parse_place_list(const FieldPtr& field, std::string_view text);

}  // namespace qf2

#endif  // QF2_PARSE_HPP
