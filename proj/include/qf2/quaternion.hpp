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

#ifndef QF2_QUATERNION_HPP
#define QF2_QUATERNION_HPP

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qf2/quaternary.hpp"

namespace qf2 {

/// [a, b>: generated by i, j with i^2 + i = a, j^2 = b, ij = j(i + 1).
struct QuaternionAlgebra {
  RatFunc a, b;

  bool operator==(const QuaternionAlgebra& o) const { return a == o.a && b == o.b; }
  const FieldPtr& field() const { return a.field(); }
};

/// x0 + x1 i + x2 j + x3 ij.
struct Quaternion {
  QuaternionAlgebra algebra;
  std::array<RatFunc, 4> coords;

  static Quaternion scalar(const QuaternionAlgebra& A, const RatFunc& s);
  static Quaternion basis(const QuaternionAlgebra& A, int index);
  bool is_zero() const;
  bool operator==(const Quaternion& o) const { return algebra == o.algebra && coords == o.coords; }
};

Quaternion operator+(const Quaternion& p, const Quaternion& q);
/// Throws MathError when p and q live in different algebras.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

/// x0^2 + x0 x1 + a x1^2 + b (x2^2 + x2 x3 + a x3^2).
RatFunc nrd(const Quaternion& x);
/// x + conj(x) = x1; x * conj(x) = nrd(x).
Quaternion conjugate(const Quaternion& x);

/// Places where the algebra stays a division algebra. Candidates are the
/// places in the support of a and b, and infinity.
std::vector<Place> ramified_places(const QuaternionAlgebra& A);

struct SplitResult {
  bool split;
  /// A nonzero element of reduced norm 0 when split.
  std::optional<Quaternion> zero_divisor;
};

/// The witness comes from b (x^2 + xy + a y^2) = 1 via solve_binary, or from
/// i + g when a = g^2 + g. Throws BudgetExhausted if the solver gives up on a
/// split algebra.
SplitResult is_split(const QuaternionAlgebra& A, std::mt19937_64& rng, const BinarySolveOptions& options = {});

/// An algebra ramified exactly at `places` (even count, distinct). Over the
/// finite places f_1..f_m: i^2 + i = b with b irreducible and a non-square
/// class mod each f_i, and j^2 = f_1 ... f_m.
QuaternionAlgebra construct_ramified(const std::vector<Place>& places, const FieldPtr& field, std::mt19937_64& rng);

/// The embedding form is anisotropic: X^2 + X + c does not split the algebra.
class NotSplitByExtension : public MathError {
 public:
  explicit NotSplitByExtension(AnisotropyCertificate cert)
      : MathError("the extension does not split the algebra (anisotropic at " + cert.place.to_string() + ")"),
        certificate_(std::move(cert)) {}
  const AnisotropyCertificate& certificate() const { return certificate_; }

 private:
  AnisotropyCertificate certificate_;
};

/// u with u^2 + u = c and u not central, from a zero of
/// x1^2 + x1 x2 + (a + c) x2^2 + b (x3^2 + x3 x4 + a x4^2). Throws
/// NotSplitByExtension when that form is anisotropic and BudgetExhausted
/// when the solver gives up.
Quaternion embed_subfield(const QuaternionAlgebra& A, const RatFunc& c, std::mt19937_64& rng,
                          const QuaternaryOptions& options = {});

}  // namespace qf2

#endif  // QF2_QUATERNION_HPP
