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

#ifndef QF2_ARITH_HPP
#define QF2_ARITH_HPP

#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qf2/poly.hpp"
#include "qf2/ratfunc.hpp"

namespace qf2 {

/// Valuation of zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// A place of GF(2^k)(t): a monic irreducible polynomial or the degree
/// valuation at infinity.
class Place {
 public:
  /// Checked constructor: normalizes to monic and verifies irreducibility.
  static Place finite(const Poly& f);
  /// For carriers already known to be monic irreducible (factor output).
  static Place finite_unchecked(Poly f);
  static Place infinite() { return Place(); }

  bool is_infinite() const { return !f_.has_value(); }
  bool is_finite() const { return f_.has_value(); }
  /// The carrier polynomial; only valid for finite places.
  const Poly& poly() const;
  /// Residue degree over GF(2^k): deg f, or 1 at infinity.
  int degree() const { return f_ ? f_->degree() : 1; }

  bool operator==(const Place& o) const { return f_ == o.f_; }
  bool operator!=(const Place& o) const { return !(*this == o); }
  /// Finite places ordered by (degree, coefficients); infinity last.
  bool operator<(const Place& o) const;

  std::string to_string() const { return f_ ? f_->to_string() : "inf"; }

 private:
  Place() = default;
  explicit Place(Poly f) : f_(std::move(f)) {}
  std::optional<Poly> f_;
};

/// Exponent of the monic irreducible f in the nonzero polynomial p.
int multiplicity(Poly p, const Poly& f);

/// v_P(x); kInfiniteValuation for x = 0.
int valuation(const RatFunc& x, const Place& place);

struct FactorPower {
  Poly factor;  // monic irreducible
  int exponent;
  bool operator==(const FactorPower& o) const { return factor == o.factor && exponent == o.exponent; }
};

/// Factorization into monic irreducibles, sorted by (degree, coefficients).
/// The leading coefficient is not part of the output.
std::vector<FactorPower> factor(const Poly& p);

/// Square-free decomposition: pairs (s_i, i) with p = lead * prod s_i^i,
/// each s_i monic square-free and pairwise coprime.
std::vector<FactorPower> squarefree_decomposition(const Poly& p);

bool is_irreducible(const Poly& p);

/// Distinct places of the zeros and poles of x (finite only).
std::vector<Place> finite_support(const RatFunc& x);

/// Chinese remaindering for pairwise coprime moduli. The result has degree
/// below the degree of the product of moduli.
Poly crt(const std::vector<std::pair<Poly, Poly>>& pairs);

/// The unique s mod f with s^2 = g mod f, for f irreducible.
Poly sqrt_mod(const Poly& g, const Poly& f);
/// sqrt_mod without the irreducibility check, for carriers of known places.
Poly sqrt_mod_unchecked(const Poly& g, const Poly& f);

/// Reduction of a rational function without pole at f modulo f^n.
Poly reduce_mod(const RatFunc& x, const Poly& modulus);

/// Uniformly random monic irreducible polynomial of degree d.
Poly random_irreducible(const FieldPtr& field, int d, std::mt19937_64& rng);

}  // namespace qf2

#endif  // QF2_ARITH_HPP
