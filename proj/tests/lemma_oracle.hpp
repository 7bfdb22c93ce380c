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

// Local representation decided through the valuation lemmas and explicit
// residue search, independent of the residue symbol.

#ifndef QF2_TESTS_LEMMA_ORACLE_HPP
#define QF2_TESTS_LEMMA_ORACLE_HPP

#include "qf2/local_solver.hpp"

namespace qf2::oracle {

/// Is c represented by scale * N(a) at the finite place f?
inline bool lemma_represents(const RatFunc& scale, const RatFunc& a, const RatFunc& c, const Place& f) {
  const RatFunc param = reduce_pole_at(a, f);
  const RatFunc target = c / scale;
  if (valuation(param, f) >= 0) return represents_unramified(param, target, f);
  const int r = (-valuation(param, f) - 1) / 2;
  const RatFunc b = param * RatFunc(f.poly().pow(static_cast<unsigned>(2 * r + 1)));
  // N(x, y) = T  <=>  f^(2r+1) N = (T f) f^(2r); T f is adjusted by squares.
  RatFunc cs = target * RatFunc(f.poly());
  const int v = valuation(cs, f);
  const int k = v >= 0 ? v / 2 : -((-v + 1) / 2);
  cs = cs / RatFunc(f.poly()).pow(2 * k);
  return represents_ramified(b, cs, f, r).has_value();
}

/// Is the quaternion algebra with i^2 + i = a, j^2 = b ramified at p? Split
/// iff b is a local norm from X^2 + X + a; infinity through t -> 1/t.
inline bool lemma_ramified(const RatFunc& a, const RatFunc& b, const Place& p) {
  if (a.is_zero()) return false;
  const RatFunc one = RatFunc::one(a.field());
  if (p.is_infinite())
    return !lemma_represents(one, a.invert_variable(), b.invert_variable(), Place::finite_unchecked(Poly::t(a.field())));
  return !lemma_represents(one, a, b, p);
}

}  // namespace qf2::oracle

#endif  // QF2_TESTS_LEMMA_ORACLE_HPP
