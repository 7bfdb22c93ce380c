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

#ifndef QF2_FIELD_HPP
#define QF2_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf2 {

/// Raised for malformed mathematical input (bad modulus, pole where a symbol
/// is undefined, violated preconditions).
class MathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of GF(2^k): the k-bit coordinate vector in the power basis of the
/// defining modulus. Addition is XOR.
using Elem = std::uint32_t;

/// The finite field GF(2^k), k <= 16, given by an irreducible binary modulus.
///
/// Multiplication goes through log/exp tables built from a primitive element,
/// so a Field is somewhat heavy to build and is always shared through
/// FieldPtr. All members are const after construction.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Builds GF(2^k). Without an explicit modulus a built-in irreducible
  /// polynomial is used. The modulus is a bit mask including the x^k term.
  static std::shared_ptr<const Field> make(unsigned k, std::optional<std::uint32_t> modulus = {});

  /// Built-in default modulus for GF(2^k).
  static std::uint32_t default_modulus(unsigned k);

  /// True if the binary polynomial with the given bit mask is irreducible.
  static bool is_irreducible_binary(std::uint32_t poly);

  unsigned k() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return q_; }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Unique square root (Frobenius is bijective).
  Elem sqrt(Elem a) const;
  /// Absolute trace GF(2^k) -> GF(2).
  unsigned trace(Elem a) const;
  /// Some e with e^2 + e = c, when Tr(c) = 0. Solved as a GF(2)-linear system.
  std::optional<Elem> solve_wp(Elem c) const;

  /// The declared generator: the class of x modulo the defining polynomial.
  Elem generator() const { return k_ == 1 ? 1 : 2; }
  /// Discrete log with respect to generator(), if the generator is primitive
  /// and a != 0.
  std::optional<std::uint32_t> log_generator(Elem a) const;

  Elem random(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() & (q_ - 1));
  }

  bool operator==(const Field& o) const { return k_ == o.k_ && modulus_ == o.modulus_; }

  /// Human-readable element: 0, 1, g, g^j; bit-string when the generator
  /// is not primitive.
  std::string format(Elem a) const;

  Field(unsigned k, std::uint32_t modulus);

 private:
  Elem mul_slow(Elem a, Elem b) const;

  unsigned k_;
  std::uint32_t modulus_;
  std::uint32_t q_;
  std::vector<Elem> exp_;           // 2*(q-1) entries
  std::vector<std::uint32_t> log_;  // q entries, log_[0] unused
  bool generator_primitive_ = false;
  std::vector<std::uint32_t> gen_log_;  // discrete log base generator()
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace qf2

#endif  // QF2_FIELD_HPP
