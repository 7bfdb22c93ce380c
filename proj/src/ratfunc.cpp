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

#include "qf2/ratfunc.hpp"

namespace qf2 {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  const FieldPtr f = den.field();
  if (num.is_zero()) {
    num_ = Poly(f);
    den_ = Poly::constant(f, 1);
    return;
  }
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = num / g;
      den = den / g;
    }
  }
  const Elem inv = f->inv(den.lead());
  num_ = num.scale(inv);
  den_ = den.scale(inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (den_.is_one()) return RatFunc(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return RatFunc(num_ + o.num_ * den_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(field());
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  // Cross-cancel first to keep the gcd small.
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  return RatFunc((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw MathError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::invert_variable() const {
  if (is_zero()) return *this;
  const int dn = num_.degree();
  const int dd = den_.degree();
  Poly n = num_.reverse(dn);
  Poly d = den_.reverse(dd);
  if (dd > dn) n = n.shift(dd - dn);
  if (dn > dd) d = d.shift(dn - dd);
  return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    bool single = true;
    for (char ch : s)
      if (ch == '+') single = false;
    return single ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace qf2
