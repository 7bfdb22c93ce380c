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

#ifndef QF2_ARTIN_SCHREIER_HPP
#define QF2_ARTIN_SCHREIER_HPP

#include <optional>
#include <string>

#include "qf2/arith.hpp"

namespace qf2 {

/// The binary form scale * (x^2 + x*y + param * y^2): the scaled norm form of
/// the Artin-Schreier extension defined by X^2 + X + param.
struct BinaryNormForm {
  RatFunc scale;
  RatFunc param;
  /// Set by minimize(): every pole of param, including infinity, has odd order.
  bool minimal = false;

  RatFunc evaluate(const RatFunc& x, const RatFunc& y) const {
    return scale * (x.square() + x * y + param * y.square());
  }
};

/// A substitution x -> x + h*y. Applied to the norm form with parameter p it
/// yields the norm form with parameter p + h^2 + h.
struct WpShift {
  RatFunc h;
};

/// [a, f): 0 iff a = x^2 + x mod f for some polynomial x. Computed as the
/// absolute trace of a mod f. Throws MathError when a has a pole at f.
unsigned symbol_finite(const RatFunc& a, const Place& f);

/// [a, inf): 0 iff a = x^2 + x mod 1/t with x in GF(2^k)[1/t]. Throws when
/// deg a > 0.
unsigned symbol_infinite(const RatFunc& a);

/// Dispatches to symbol_finite / symbol_infinite.
unsigned symbol(const RatFunc& a, const Place& place);

struct MinimizeResult {
  BinaryNormForm form;
  /// param_in = param_out + h^2 + h.
  WpShift shift;
};

/// Equivalent minimal norm form: even-order finite poles are removed in
/// ascending place order (Frobenius roots modulo the place), then the even
/// degree at infinity is reduced by leading-term shifts.
MinimizeResult minimize(const BinaryNormForm& form);

/// Removes the pole of param at a single place until it is of odd order or
/// gone. Returns the new parameter and accumulates the shift into *shift.
RatFunc reduce_pole_at(const RatFunc& param, const Place& place, RatFunc* shift = nullptr);

/// Some h in GF(2^k)(t) with h^2 + h = g, if one exists.
std::optional<RatFunc> wp_solve_rational(const RatFunc& g);

/// The local norm residue symbol [a, c)_P in {0, 1}: 0 iff c is a norm from
/// the completion of GF(2^k)(t)(X^2 + X + a) at P (or the extension splits
/// there). Evaluated as the absolute trace of the residue of a * dc / c at P.
/// Requires c != 0.
unsigned norm_residue_symbol(const RatFunc& a, const RatFunc& c, const Place& place);

}  // namespace qf2

#endif  // QF2_ARTIN_SCHREIER_HPP
