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

#include "qf2/local_solver.hpp"

#include <algorithm>
#include <cmath>

namespace qf2 {

namespace {

bool has_pole(const RatFunc& x, const Place& f) { return valuation(x, f) < 0; }

unsigned parity(int v) { return static_cast<unsigned>(v) & 1u; }

/// Parity nu of v(c) making c / a1 a norm of an unramified (or split) a2 and
/// c / a3 one of a4, given the residue symbols s2, s4. nullopt in the
/// returned pair's first slot means no parity works; the second slot is false
/// when every parity works.
std::pair<std::optional<unsigned>, bool> unramified_parity(unsigned s2, unsigned s4, int v1, int v3) {
  if (s2 && s4) {
    if (parity(v1) != parity(v3)) return {std::nullopt, true};
    return {parity(v1), true};
  }
  if (s2) return {parity(v1), true};
  if (s4) return {parity(v3), true};
  return {0u, false};
}

void require_nonzero(const RatFunc& x, const char* name) {
  if (x.is_zero()) throw MathError(std::string(name) + " must be nonzero");
}

}  // namespace

Poly QuadraticEquation::residual(const Poly& x, const Poly& y, const Poly& modulus) const {
  Poly r = (A % modulus) * (x.square() % modulus);
  r += (B % modulus) * ((x * y) % modulus);
  r += (C % modulus) * (y.square() % modulus);
  r += rhs;
  return r % modulus;
}

bool InfiniteCondition::admits(const Poly& c) const {
  if (c.is_zero()) return false;
  if (parity && qf2::parity(c.degree()) != *parity) return false;
  if (N == 0) return true;
  const Poly m = Poly::monomial(c.field(), 1, N);
  return (c.reverse(c.degree()) % m) == (residue % m);
}

bool locally_represents(const BinaryNormForm& form, const RatFunc& c, const Place& place) {
  require_nonzero(c, "represented value");
  return norm_residue_symbol(form.param, c / form.scale, place) == 0;
}

bool represents_unramified(const RatFunc& a, const RatFunc& c, const Place& f) {
  require_nonzero(c, "represented value");
  if (has_pole(a, f)) throw MathError("parameter has a pole at " + f.to_string() + "; use the ramified test");
  if (valuation(c, f) % 2 == 0) return true;
  return symbol(a, f) == 0;
}

bool quaternary_isotropic_odd_place(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3, const RatFunc& a4,
                                    const Place& f) {
  if (f.is_infinite()) throw MathError("quaternary_isotropic_odd_place needs a finite place");
  if (!a1.is_polynomial() || !a3.is_polynomial()) throw MathError("a1 and a3 must be polynomials");
  require_nonzero(a1, "a1");
  require_nonzero(a3, "a3");
  if (!gcd(a1.num(), a3.num()).is_one()) throw MathError("a1 and a3 must be coprime");
  for (const RatFunc* a : {&a1, &a3})
    for (const auto& fp : factor(a->num()))
      if (fp.exponent > 1) throw MathError("a1 and a3 must be square-free");
  if (has_pole(a2, f)) throw MathError("a2 has a pole at " + f.to_string());
  if (has_pole(a4, f)) throw MathError("a4 has a pole at " + f.to_string());
  if (valuation(a1 * a3, f) % 2 == 0) throw MathError("v_f(a1*a3) must be odd");
  return symbol(a2, f) == 0 || symbol(a4, f) == 0;
}

QuadraticEquation ramified_equation(const RatFunc& b, const RatFunc& c, const Place& f, int r) {
  const Poly& fp = f.poly();
  const Poly modulus = fp.pow(static_cast<unsigned>(4 * r + 3));
  const Poly f2r1 = fp.pow(static_cast<unsigned>(2 * r + 1));
  return {f2r1, f2r1, reduce_mod(b, modulus), (reduce_mod(c, modulus) * fp.pow(static_cast<unsigned>(2 * r))) % modulus};
}

std::optional<LocalWitness> represents_ramified(const RatFunc& b, const RatFunc& c, const Place& f, int r) {
  if (f.is_infinite()) throw MathError("represents_ramified needs a finite place");
  if (r < 0) throw MathError("r must be nonnegative");
  if (valuation(b, f) != 0) throw MathError("v_f(b) must be 0");
  const int vc = valuation(c, f);
  if (vc != 0 && vc != 1) throw MathError("v_f(c) must be 0 or 1");
  const FieldPtr& F = b.field();
  const int digits = f.degree() * (r + 2);
  const double pairs = 2.0 * digits * F->k();
  if (pairs > 22) throw MathError("local search space too large");

  const QuadraticEquation eq = ramified_equation(b, c, f, r);
  const Poly modulus = f.poly().pow(static_cast<unsigned>(4 * r + 3));
  const Poly fr = f.poly().pow(static_cast<unsigned>(r));
  const std::uint64_t count = std::uint64_t{1} << (digits * F->k());
  auto poly_at = [&](std::uint64_t index) {
    std::vector<Elem> cs(static_cast<std::size_t>(digits));
    for (int i = 0; i < digits; ++i) {
      cs[static_cast<std::size_t>(i)] = static_cast<Elem>(index & (F->size() - 1));
      index >>= F->k();
    }
    return Poly(F, std::move(cs));
  };
  std::optional<LocalWitness> fallback;
  for (std::uint64_t ix = 0; ix < count; ++ix) {
    const Poly x = poly_at(ix);
    const bool x_unit = !(x % f.poly()).is_zero();
    if (!x_unit && fallback) continue;
    for (std::uint64_t iy = 0; iy < count; ++iy) {
      const Poly y = fr * poly_at(iy);
      if (!eq.residual(x, y, modulus).is_zero()) continue;
      LocalWitness w{f, 4 * r + 3, x, y};
      if (x_unit) return w;
      if (!fallback) fallback = w;
      break;
    }
  }
  return fallback;
}

namespace {

// For A = B = f^(2r+1) alpha, C a unit: x = u0 + f^(r+1) x1 (or
// y = v0 + f^(2r+1) y1) turns F(x, y) = 0 into F0 / f^(4r+2) + alpha v1 x1 +
// f alpha x1^2 = 0 (or ... + alpha u0 y1 + C y1^2 = 0), whose derivative
// alpha v1 (alpha u0) is a unit when the witness holds mod f^(4r+3).
std::optional<LocalWitness> lift_ramified_shape(const LocalWitness& w, const QuadraticEquation& eq, int target) {
  const Poly& f = w.place.poly();
  if (eq.A.is_zero() || eq.A != eq.B || (eq.C % f).is_zero()) return std::nullopt;
  const int k = multiplicity(eq.A, f);
  if (k % 2 == 0) return std::nullopt;
  const int r = (k - 1) / 2;
  if (w.precision < 4 * r + 3) return std::nullopt;
  const Poly fr = f.pow(static_cast<unsigned>(r));
  if (!(w.v0 % fr).is_zero()) return std::nullopt;
  const Poly base = f.pow(static_cast<unsigned>(4 * r + 2));
  const Poly mod = f.pow(static_cast<unsigned>(std::max(target - (4 * r + 2), 1)));
  const Poly alpha = eq.A / f.pow(static_cast<unsigned>(k));
  const Poly v1 = w.v0 / fr;
  const bool move_x = !(v1 % f).is_zero();
  if (!move_x && (w.u0 % f).is_zero()) return std::nullopt;
  const Poly deriv_inv = ((alpha * (move_x ? v1 : w.u0)) % mod).invmod(mod);
  const Poly step = move_x ? f.pow(static_cast<unsigned>(r + 1)) : f.pow(static_cast<unsigned>(2 * r + 1));
  Poly z(f.field());
  const Poly full = f.pow(static_cast<unsigned>(target));
  for (int guard = 0; guard < 64; ++guard) {
    const Poly x = move_x ? w.u0 + step * z : w.u0;
    const Poly y = move_x ? w.v0 : w.v0 + step * z;
    const Poly F0 = eq.A * x.square() + eq.B * x * y + eq.C * y.square() + eq.rhs;
    if ((F0 % full).is_zero()) return LocalWitness{w.place, target, x % full, y % full};
    if (!(F0 % base).is_zero()) return std::nullopt;
    z = (z + ((F0 / base) % mod) * deriv_inv) % mod;
  }
  return std::nullopt;
}

}  // namespace

LocalWitness hensel_lift(const LocalWitness& witness, const QuadraticEquation& eq, int target_precision) {
  if (witness.place.is_infinite()) throw MathError("hensel_lift needs a finite place");
  const Poly& f = witness.place.poly();
  int n = witness.precision;
  Poly x = witness.u0, y = witness.v0;
  if (!eq.residual(x, y, f.pow(static_cast<unsigned>(n))).is_zero())
    throw MathError("witness does not satisfy the equation");
  const Poly target_mod = f.pow(static_cast<unsigned>(std::max(target_precision, 1)));
  if (eq.residual(x, y, target_mod).is_zero()) return {witness.place, target_precision, x % target_mod, y % target_mod};

  // The gradient in characteristic 2 is (B y, B x).
  const Poly fn = f.pow(static_cast<unsigned>(n));
  const Poly gx = (eq.B * y) % fn, gy = (eq.B * x) % fn;
  const int ex = gx.is_zero() ? n : multiplicity(gx, f);
  const int ey = gy.is_zero() ? n : multiplicity(gy, f);
  const int e = std::min(ex, ey);
  if (n < 2 * e + 1) {
    if (auto w = lift_ramified_shape(witness, eq, target_precision)) return *w;
    throw MathError("not liftable from this witness");
  }
  const bool move_x = ex <= ey;

  while (n < target_precision) {
    const Poly work = f.pow(static_cast<unsigned>(target_precision + e));
    const Poly fe = f.pow(static_cast<unsigned>(e));
    const Poly res = eq.residual(x, y, work);
    const Poly grad = (eq.B * (move_x ? y : x)) % work;
    const Poly target = f.pow(static_cast<unsigned>(target_precision));
    const Poly delta = ((res / fe) * (grad / fe).invmod(target)) % target;
    // F(x + d, y) = F + B y d + A d^2, so the new error is A d^2.
    if (move_x) {
      x = (x + delta) % target;
    } else {
      y = (y + delta) % target;
    }
    n = std::min(2 * (n - e), target_precision);
  }
  const Poly target = f.pow(static_cast<unsigned>(target_precision));
  if (!eq.residual(x, y, target).is_zero()) throw MathError("internal error: Hensel step lost precision");
  return {witness.place, target_precision, x, y};
}

std::optional<Congruence> common_value_pole(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                            const RatFunc& a4, const Place& f, std::mt19937_64& rng) {
  if (f.is_infinite()) throw MathError("common_value_pole needs a finite place");
  require_nonzero(a1, "a1");
  require_nonzero(a3, "a3");
  const int v2 = valuation(a2, f), v4 = valuation(a4, f);
  if (v2 >= 0 && v4 >= 0) throw MathError("neither a2 nor a4 has a pole at " + f.to_string());
  if ((v2 < 0 && v2 % 2 == 0) || (v4 < 0 && v4 % 2 == 0))
    throw MathError("parameters must be minimal at " + f.to_string());

  // The local extensions coincide iff a2 + a4 becomes x^2 + x locally.
  const RatFunc diff = reduce_pole_at(a2 + a4, f);
  const bool same_extension = !has_pole(diff, f) && symbol_finite(diff, f) == 0;
  if (same_extension && norm_residue_symbol(a2, a1 / a3, f) != 0) return std::nullopt;

  const int N = 2 * std::max(-v2, -v4) + 1;
  const Poly modulus = f.poly().pow(static_cast<unsigned>(N));
  const int bound = modulus.degree();
  const double log2_space = static_cast<double>(bound) * f.poly().field()->k();
  const std::uint64_t attempts = log2_space + 6 >= 20 ? (std::uint64_t{1} << 20) : (std::uint64_t{64} << static_cast<unsigned>(log2_space));
  for (std::uint64_t i = 0; i < attempts; ++i) {
    // v_f(c) in {0, 1} with equal odds; uniform residues would almost never
    // be divisible by a large f.
    const bool shifted = rng() & 1;
    const Poly u = Poly::random_below(f.poly().field(), bound - (shifted ? f.degree() : 0), rng);
    if ((u % f.poly()).is_zero()) continue;
    const Poly c = shifted ? u * f.poly() : u;
    if (norm_residue_symbol(a2, RatFunc(c) / a1, f) == 0 && norm_residue_symbol(a4, RatFunc(c) / a3, f) == 0)
      return Congruence{f, N, c};
  }
  throw MathError("internal error: no common local value found at " + f.to_string());
}

std::optional<unsigned> common_value_odd(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                         const RatFunc& a4, const Place& f) {
  require_nonzero(a1, "a1");
  require_nonzero(a3, "a3");
  if (has_pole(a2, f)) throw MathError("a2 has a pole at " + f.to_string());
  if (has_pole(a4, f)) throw MathError("a4 has a pole at " + f.to_string());
  const int v1 = valuation(a1, f), v3 = valuation(a3, f);
  if (parity(v1 + v3) == 0) throw MathError("v_f(a1*a3) must be odd");
  return unramified_parity(symbol(a2, f), symbol(a4, f), v1, v3).first;
}

std::optional<InfiniteCondition> common_value_inf(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                                  const RatFunc& a4, std::mt19937_64& rng) {
  require_nonzero(a1, "a1");
  require_nonzero(a3, "a3");
  const FieldPtr& F = a1.field();
  const Place s = Place::finite_unchecked(Poly::t(F));
  const RatFunc ia1 = a1.invert_variable(), ia3 = a3.invert_variable();
  const RatFunc ia2 = reduce_pole_at(a2.invert_variable(), s);
  const RatFunc ia4 = reduce_pole_at(a4.invert_variable(), s);
  // For c of degree D, c(1/s) = rev(c) / s^D.
  if (has_pole(ia2, s) || has_pole(ia4, s)) {
    auto cong = common_value_pole(ia1, ia2, ia3, ia4, s, rng);
    if (!cong) return std::nullopt;
    const int v = multiplicity(cong->residue, s.poly());
    return InfiniteCondition{cong->residue.shift(-v), cong->N - v, static_cast<unsigned>(v)};
  }
  auto [nu, constrained] = unramified_parity(symbol(ia2, s), symbol(ia4, s), valuation(ia1, s), valuation(ia3, s));
  if (!nu) return std::nullopt;
  InfiniteCondition cond{Poly::constant(F, 1), 0, std::nullopt};
  if (constrained) cond.parity = *nu;
  return cond;
}

}  // namespace qf2
