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

#ifndef QF2_RATFUNC_HPP
#define QF2_RATFUNC_HPP

#include <string>

#include "qf2/poly.hpp"

namespace qf2 {

/// Element of GF(2^k)(t) in lowest terms with a monic denominator, so that
/// equality is structural.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(FieldPtr field) : num_(field), den_(Poly::constant(field, 1)) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor): polynomials embed
  RatFunc(Poly num, Poly den);

  static RatFunc constant(FieldPtr field, Elem c) { return RatFunc(Poly::constant(std::move(field), c)); }
  static RatFunc zero(FieldPtr field) { return RatFunc(std::move(field)); }
  static RatFunc one(FieldPtr field) { return constant(std::move(field), 1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field() ? num_.field() : den_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// deg(num) - deg(den), i.e. -v_inf. Undefined for zero.
  int degree() const { return num_.degree() - den_.degree(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const { return *this + o; }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;
  RatFunc square() const { return RatFunc(num_.square(), den_.square()); }
  /// x^2 + x.
  RatFunc wp() const { return square() + *this; }
  RatFunc pow(int e) const;

  /// The image under the field automorphism t -> 1/t.
  RatFunc invert_variable() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace qf2

#endif  // QF2_RATFUNC_HPP
