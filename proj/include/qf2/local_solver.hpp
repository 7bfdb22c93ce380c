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

#ifndef QF2_LOCAL_SOLVER_HPP
#define QF2_LOCAL_SOLVER_HPP

#include <optional>
#include <random>
#include <variant>

#include "qf2/artin_schreier.hpp"

namespace qf2 {

/// A solution (u0, v0) of some equation modulo f^precision.
struct LocalWitness {
  Place place;
  int precision;
  Poly u0, v0;
};

/// A*x^2 + B*x*y + C*y^2 = rhs over GF(2^k)[t].
struct QuadraticEquation {
  Poly A, B, C, rhs;
  /// Left minus right side at (x, y), reduced modulo `modulus`.
  Poly residual(const Poly& x, const Poly& y, const Poly& modulus) const;
};

/// Every polynomial congruent to `residue` modulo place^N is a common value.
struct Congruence {
  Place place;
  int N;
  Poly residue;
  Poly modulus() const { return place.poly().pow(static_cast<unsigned>(N)); }
};

/// Every c with v_place(c) = nu mod 2 is a common value.
struct ValuationParity {
  Place place;
  unsigned nu;
};

/// Condition at infinity on a polynomial c of degree D with reversal
/// rev(c) = t^D c(1/t): rev(c) = residue mod t^N, and D = parity mod 2 when a
/// parity is set. N = 0 means no congruence.
struct InfiniteCondition {
  Poly residue;
  int N;
  std::optional<unsigned> parity;
  bool admits(const Poly& c) const;
};

using LocalCondition = std::variant<Congruence, ValuationParity, InfiniteCondition>;

/// Local representability of c by scale * (x^2 + x*y + param*y^2) at a place,
/// decided by the norm residue symbol.
bool locally_represents(const BinaryNormForm& form, const RatFunc& c, const Place& place);

/// x^2 + x*y + a*y^2 = c in the completion at f, for a without pole at f.
bool represents_unramified(const RatFunc& a, const RatFunc& c, const Place& f);

/// Isotropy of the quaternary form at a place where v_f(a1*a3) is odd and
/// a2, a4 are regular: [a2, f) = 0 or [a4, f) = 0.
bool quaternary_isotropic_odd_place(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3, const RatFunc& a4,
                                    const Place& f);

/// Searches f^(2r+1) x^2 + f^(2r+1) x y + b y^2 = c f^(2r) modulo f^(4r+3)
/// with y = f^r y1 and x, y1 running over residues mod f^(r+2). Requires
/// v_f(b) = 0 and v_f(c) in {0, 1}. Throws when the residue space exceeds
/// 2^22 pairs. Witnesses with x a unit are preferred since they lift.
std::optional<LocalWitness> represents_ramified(const RatFunc& b, const RatFunc& c, const Place& f, int r);

/// The equation solved by represents_ramified.
QuadraticEquation ramified_equation(const RatFunc& b, const RatFunc& c, const Place& f, int r);

/// Newton lifting of a witness of eq to precision f^target. With e the
/// valuation of the gradient (B y, B x), the witness must hold modulo
/// f^(2e+1). Equations of the shape solved by represents_ramified lift from
/// precision f^(4r+3) through the substitution x = u0 + f^(r+1) x1 or
/// y = v0 + f^(2r+1) y1 instead. Otherwise throws "not liftable from this
/// witness".
LocalWitness hensel_lift(const LocalWitness& witness, const QuadraticEquation& eq, int target_precision);

/// Common local values of a1 * N(a2) and a3 * N(a4) at a pole f of a2 or a4.
/// Returns none when the two local extensions coincide and a1 / a3 is not a
/// local norm, i.e. the quaternary form is anisotropic at f.
std::optional<Congruence> common_value_pole(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                            const RatFunc& a4, const Place& f, std::mt19937_64& rng);

/// Parity of v_f(c) for common values at a place with a2, a4 regular and
/// v_f(a1 * a3) odd; none iff [a2, f) = [a4, f) = 1. Prefers nu = 0.
std::optional<unsigned> common_value_odd(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                         const RatFunc& a4, const Place& f);

/// Common values at infinity, obtained at the place t after t -> 1/t.
std::optional<InfiniteCondition> common_value_inf(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                                  const RatFunc& a4, std::mt19937_64& rng);

}  // namespace qf2

#endif  // QF2_LOCAL_SOLVER_HPP
