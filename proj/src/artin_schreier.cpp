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

#include "qf2/artin_schreier.hpp"

namespace qf2 {

namespace {

/// Absolute trace of x in GF(2^k)[t]/(f) down to GF(2).
unsigned residue_field_trace(const Poly& x, const Poly& f) {
  const unsigned steps = f.field()->k() * static_cast<unsigned>(f.degree());
  Poly acc = x % f;
  Poly cur = acc;
  for (unsigned i = 1; i < steps; ++i) {
    cur = cur.square() % f;
    acc += cur;
  }
  if (!acc.is_constant()) throw MathError("trace left GF(2); modulus is not irreducible");
  return acc.is_zero() ? 0u : static_cast<unsigned>(acc.coeff(0));
}

/// Value at infinity of x with deg x <= 0.
Elem value_at_infinity(const RatFunc& x) {
  if (x.is_zero() || x.degree() < 0) return 0;
  return x.field()->div(x.num().lead(), x.den().lead());
}

}  // namespace

unsigned symbol_finite(const RatFunc& a, const Place& f) {
  if (f.is_infinite()) throw MathError("symbol_finite called with the infinite place");
  if (valuation(a, f) < 0) throw MathError("symbol undefined at pole");
  if (a.is_zero()) return 0;
  return residue_field_trace(reduce_mod(a, f.poly()), f.poly());
}

unsigned symbol_infinite(const RatFunc& a) {
  if (!a.is_zero() && a.degree() > 0) throw MathError("symbol undefined at pole");
  return a.field() ? a.field()->trace(value_at_infinity(a)) : 0u;
}

unsigned symbol(const RatFunc& a, const Place& place) {
  return place.is_infinite() ? symbol_infinite(a) : symbol_finite(a, place);
}

RatFunc reduce_pole_at(const RatFunc& param, const Place& place, RatFunc* shift) {
  RatFunc a = param;
  const FieldPtr& F = param.field();
  auto add_shift = [&](const RatFunc& s) {
    a = a + s.wp();
    if (shift) *shift = *shift + s;
  };
  if (place.is_infinite()) {
    for (;;) {
      if (a.is_zero()) break;
      const int d = a.degree();
      if (d <= 0 || d % 2 != 0) break;
      const Elem c = F->sqrt(F->div(a.num().lead(), a.den().lead()));
      add_shift(RatFunc(Poly::monomial(F, c, d / 2)));
    }
    return a;
  }
  const Poly& f = place.poly();
  for (;;) {
    const int m = multiplicity(a.den(), f);
    if (m == 0 || m % 2 != 0) break;
    const int r = m / 2;
    const Poly fr = f.pow(static_cast<unsigned>(r));
    const Poly h1 = a.den() / (fr * fr);
    // g^2 * h1 = num mod f, so num / (f^2r h1) loses its leading pole term.
    const Poly g = sqrt_mod_unchecked((a.num() * h1.invmod(f)) % f, f);
    add_shift(RatFunc(g, fr));
  }
  return a;
}

MinimizeResult minimize(const BinaryNormForm& form) {
  RatFunc h = RatFunc::zero(form.param.field());
  RatFunc a = form.param;
  if (!a.is_zero() && !a.den().is_constant()) {
    for (const auto& fp : factor(a.den())) {
      if (fp.exponent % 2 == 0) a = reduce_pole_at(a, Place::finite_unchecked(fp.factor), &h);
    }
  }
  a = reduce_pole_at(a, Place::infinite(), &h);
  return {BinaryNormForm{form.scale, a, true}, WpShift{h}};
}

std::optional<RatFunc> wp_solve_rational(const RatFunc& g) {
  const FieldPtr& F = g.field();
  if (g.is_zero()) return RatFunc::zero(F);
  auto [form, shift] = minimize(BinaryNormForm{RatFunc::one(F), g, false});
  if (!form.param.is_constant()) return std::nullopt;
  const Elem c0 = form.param.is_zero() ? 0 : form.param.num().coeff(0);
  auto e = F->solve_wp(c0);
  if (!e) return std::nullopt;
  return shift.h + RatFunc::constant(F, *e);
}

unsigned norm_residue_symbol(const RatFunc& a, const RatFunc& c, const Place& place) {
  if (c.is_zero()) throw MathError("norm residue symbol of zero");
  if (a.is_zero()) return 0;
  // dc / c = n'/n + d'/d.
  RatFunc logder = RatFunc(c.num().derivative(), c.num());
  if (!c.den().is_constant()) logder = logder + RatFunc(c.den().derivative(), c.den());
  const RatFunc w = a * logder;
  if (w.is_zero()) return 0;
  const FieldPtr& F = a.field();

  if (place.is_infinite()) {
    // Coefficient of t^-1 in the expansion at infinity.
    const Poly rem = w.num() % w.den();
    if (rem.is_zero() || rem.degree() != w.den().degree() - 1) return 0;
    return F->trace(F->div(rem.lead(), w.den().lead()));
  }
  const Poly& f = place.poly();
  const int e = multiplicity(w.den(), f);
  if (e == 0) return 0;
  const Poly fe1 = f.pow(static_cast<unsigned>(e - 1));
  const Poly fe = fe1 * f;
  const Poly cofactor = w.den() / fe;
  // Principal part P / f^e; the 1/f digit of P carries the trace-residue.
  const Poly principal = (w.num() * cofactor.invmod(fe)) % fe;
  const Poly digit = principal / fe1;
  return F->trace(digit.coeff(f.degree() - 1));
}

}  // namespace qf2
