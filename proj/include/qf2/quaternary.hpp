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

#ifndef QF2_QUATERNARY_HPP
#define QF2_QUATERNARY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "qf2/binary_norm.hpp"
#include "qf2/local_solver.hpp"

namespace qf2 {

using Vec4 = std::array<RatFunc, 4>;

/// A 4x4 matrix stored by columns: apply(v) = sum_j v[j] * col[j].
struct Mat4 {
  std::array<Vec4, 4> col;

  static Mat4 identity(const FieldPtr& F);
  Vec4 apply(const Vec4& v) const;
  /// (*this) * other.
  Mat4 compose(const Mat4& other) const;
};

Vec4 zero_vec(const FieldPtr& F);
Vec4 unit_vec(const FieldPtr& F, int i);
bool is_zero(const Vec4& v);

/// Q(x) = sum_{i <= j} gram[i][j] x_i x_j; entries below the diagonal are
/// ignored.
struct QuaternaryForm {
  std::array<std::array<RatFunc, 4>, 4> gram;

  /// a1 (x1^2 + x1 x2 + a2 x2^2) + a3 (x3^2 + x3 x4 + a4 x4^2).
  static QuaternaryForm from_coefficients(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3, const RatFunc& a4);

  const FieldPtr& field() const { return gram[0][0].field(); }
  RatFunc evaluate(const Vec4& v) const;
  /// Polar form Q(u + v) + Q(u) + Q(v); alternating.
  RatFunc polar(const Vec4& u, const Vec4& v) const;
};

/// Q(transform * v) = scale * (a1 N(a2)(x1, x2) + a3 N(a4)(x3, x4)).
struct CanonicalForm {
  RatFunc a1, a2, a3, a4;
  Mat4 transform;
  RatFunc scale;
};

/// A basis vector with Q(v) = 0 met during canonicalization.
struct EarlyZero {
  Vec4 vector;
};

/// The polar form is degenerate; carries a basis of its radical.
class DegenerateForm : public MathError {
 public:
  explicit DegenerateForm(std::vector<Vec4> radical)
      : MathError("degenerate quadratic form"), radical_(std::move(radical)) {}
  const std::vector<Vec4>& radical() const { return radical_; }

 private:
  std::vector<Vec4> radical_;
};

/// Symplectic reduction of the polar form into two hyperbolic-type pairs.
/// Throws DegenerateForm.
std::variant<CanonicalForm, EarlyZero> canonicalize(const QuaternaryForm& form);

/// a1, a3 coprime monic square-free polynomials, a2, a4 minimal, with
/// Q_in(transform * v) = scale * Q_out(v).
struct NormalizedForm {
  Poly a1, a3;
  RatFunc a2, a4;
  Mat4 transform;
  RatFunc scale;

  QuaternaryForm form() const { return QuaternaryForm::from_coefficients(RatFunc(a1), a2, RatFunc(a3), a4); }
};

NormalizedForm normalize_coefficients(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3, const RatFunc& a4);

/// Local obstruction to isotropy at a single place.
struct AnisotropyCertificate {
  enum class Kind {
    /// a2, a4 regular at the place, v(a1 a3) odd, [a2, P) = [a4, P) = 1.
    kUnramified,
    /// The local extensions of a2 and a4 coincide (first symbol 0) and a1/a3
    /// is not a local norm ([a2, a1/a3)_P = 1, second symbol).
    kRamified,
  };
  Place place;
  Kind kind;
  unsigned first_symbol, second_symbol;
  /// The normalized coefficients the symbols refer to.
  Poly a1, a3;
  RatFunc a2, a4;

  /// Recomputes the symbols from the coefficients.
  bool check() const;
};

struct IrreducibleSearchSpec {
  /// h = a mod m.
  Poly a, m;
  /// deg h = parity mod 2 when set.
  std::optional<unsigned> parity;
  /// rev(h) = t^deg(h) h(1/t) = top mod t^top_len; fixes the top coefficients.
  Poly top;
  int top_len = 0;
  /// Monic irreducibles that h may not be a multiple of.
  std::vector<Poly> avoid;
};

/// |(GF(2^k)[t] / m)^*|; throws when it exceeds 2^63.
std::uint64_t euler_phi(const Poly& m);

/// Smallest N of the right parity with q^(N/2) > Phi(m) q^top_len (M + 1).
int wan_degree(const IrreducibleSearchSpec& spec);

/// An irreducible h (up to a constant factor fixed by `top`) in the class.
/// Starts at `start_degree` (default: wan_degree) and moves up by the parity
/// step after 64 N deg(m) failures. Throws on unsatisfiable constraints.
Poly find_irreducible_in_class(const IrreducibleSearchSpec& spec, std::mt19937_64& rng,
                               std::optional<int> start_degree = std::nullopt);

/// c = f_1 ... f_m * h, a common value of both binary forms at every place.
/// The tail h is irreducible, or any polynomial accepted by exact local tests
/// at all places dividing it.
struct CommonValue {
  std::vector<Poly> forced_places;
  Poly tail;
  Poly value;
};

struct CommonValueOptions {
  /// Degree at which the search for h starts; the Wan degree when unset.
  std::optional<int> start_degree = 0;
  /// Try c = f_1 ... f_m * lambda for constants lambda before any h.
  bool allow_constant_tail = true;
  /// Samples for the direct search over small tails h (any polynomial,
  /// accepted by exact local tests at every place of c) before the
  /// congruence-class search. 0 disables it.
  int direct_search_budget = 4096;
};

std::variant<CommonValue, AnisotropyCertificate> find_common_value(const Poly& a1, const RatFunc& a2, const Poly& a3,
                                                                   const RatFunc& a4, std::mt19937_64& rng,
                                                                   const CommonValueOptions& options = {});

struct QuaternaryOptions {
  BinarySolveOptions binary;
  CommonValueOptions common;
  /// Common values tried before reporting budget exhaustion.
  int max_common_values = 8;
};

struct QuaternaryResult {
  enum class Status { kIsotropic, kAnisotropic, kBudgetExhausted };
  Status status;
  std::optional<Vec4> zero;
  std::optional<AnisotropyCertificate> certificate;
  std::optional<NormalizedForm> normalized;
  std::optional<CommonValue> common_value;
  /// Explanation for kBudgetExhausted.
  std::string note;
};

/// Decides isotropy; a returned zero is verified on the input form.
QuaternaryResult solve_quaternary(const QuaternaryForm& form, std::mt19937_64& rng,
                                  const QuaternaryOptions& options = {});

}  // namespace qf2

#endif  // QF2_QUATERNARY_HPP
