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

#ifndef QF2_POLY_HPP
#define QF2_POLY_HPP

#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qf2/field.hpp"

namespace qf2 {

/// Degree of the zero polynomial. Acts as -infinity in comparisons and is
/// never produced by arithmetic on nonzero degrees.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Univariate polynomial over GF(2^k) in the variable t, stored as a dense
/// coefficient vector without trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, int exponent);
  /// The polynomial t.
  static Poly t(FieldPtr field) { return monomial(std::move(field), 1, 1); }
  /// Uniform random polynomial of degree < bound (bound >= 0).
  static Poly random_below(FieldPtr field, int bound, std::mt19937_64& rng);
  /// Random polynomial of exact degree d with random nonzero leading coefficient.
  static Poly random_of_degree(FieldPtr field, int d, std::mt19937_64& rng);
  static Poly random_monic(FieldPtr field, int d, std::mt19937_64& rng);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o) { return *this += o; }
  Poly& operator*=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator*(const Poly& o) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const;
  Poly scale(Elem s) const;
  /// Multiplication by t^n.
  Poly shift(int n) const;

  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  bool divides(const Poly& o) const { return (o % *this).is_zero(); }

  Poly monic() const;
  Poly derivative() const;
  /// Coefficient-wise Frobenius: p(t)^2.
  Poly square() const;
  /// The unique s with s^2 = p, when p is a square (all odd coefficients zero).
  std::optional<Poly> sqrt() const;
  Poly pow(unsigned e) const;
  Poly powmod(std::uint64_t e, const Poly& m) const;
  Poly mulmod(const Poly& o, const Poly& m) const { return (*this * o) % m; }
  /// Inverse modulo m; throws when gcd(p, m) != 1.
  Poly invmod(const Poly& m) const;
  /// t^n * p(1/t) for n >= deg p.
  Poly reverse(int n) const;
  /// Truncation modulo t^n.
  Poly truncate(int n) const;
  Elem eval(Elem x) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  /// Total order: by degree, then coefficients from the top. Used for sets.
  bool operator<(const Poly& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic.
struct XgcdResult {
  Poly g, s, u;
};
XgcdResult xgcd(const Poly& a, const Poly& b);

}  // namespace qf2

#endif  // QF2_POLY_HPP
