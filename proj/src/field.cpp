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

#include "qf2/field.hpp"

#include <array>
#include <bit>

namespace qf2 {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,       0x3,     0x7,     0xB,     0x13,   0x25,   0x43,   0x83,   0x11D,
    0x211,   0x409,   0x805,   0x1053,  0x201B, 0x4443, 0x8003, 0x1100B};

int bit_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t bit_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = bit_degree(m);
  for (int d = bit_degree(a); d >= dm; d = bit_degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

std::uint32_t Field::default_modulus(unsigned k) {
  if (k == 0 || k > kMaxDegree) throw MathError("field degree k must be in [1, 16]");
  return kDefaultModuli[k];
}

bool Field::is_irreducible_binary(std::uint32_t poly) {
  const int d = bit_degree(poly);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (std::uint64_t g = 2; bit_degree(g) <= d / 2; ++g) {
    if (bit_mod(poly, g) == 0) return false;
  }
  return true;
}

std::shared_ptr<const Field> Field::make(unsigned k, std::optional<std::uint32_t> modulus) {
  return std::make_shared<const Field>(k, modulus.value_or(default_modulus(k)));
}

Field::Field(unsigned k, std::uint32_t modulus) : k_(k), modulus_(modulus), q_(1u << k) {
  if (k == 0 || k > kMaxDegree) throw MathError("field degree k must be in [1, 16]");
  if (bit_degree(modulus) != static_cast<int>(k))
    throw MathError("modulus degree does not match k");
  if (!is_irreducible_binary(modulus)) throw MathError("field modulus is not irreducible over GF(2)");

  // Smallest primitive element; tables are in terms of it.
  const std::uint32_t order = q_ - 1;
  Elem prim = 1;
  if (order > 1) {
    for (Elem cand = 2; cand < q_; ++cand) {
      Elem x = 1;
      std::uint32_t n = 0;
      do {
        x = mul_slow(x, cand);
        ++n;
      } while (x != 1);
      if (n == order) {
        prim = cand;
        break;
      }
    }
  }
  exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, prim);
  }
  for (std::uint32_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];

  // Logs with respect to the declared generator x.
  const Elem g = generator();
  generator_primitive_ = (order == 1) || (g != 1 && [&] {
    Elem y = 1;
    std::uint32_t n = 0;
    do {
      y = mul(y, g);
      ++n;
    } while (y != 1);
    return n == order;
  }());
  if (generator_primitive_) {
    gen_log_.assign(q_, 0);
    Elem y = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      gen_log_[y] = i;
      y = mul(y, g);
    }
  }
}

Elem Field::mul_slow(Elem a, Elem b) const {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < k_; ++i)
    if ((b >> i) & 1u) r ^= static_cast<std::uint64_t>(a) << i;
  return static_cast<Elem>(bit_mod(r, modulus_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw MathError("inverse of zero in GF(2^k)");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[static_cast<std::size_t>((log_[a] * (e % order)) % order)];
}

Elem Field::sqrt(Elem a) const {
  for (unsigned i = 1; i < k_; ++i) a = sqr(a);
  return a;
}

unsigned Field::trace(Elem a) const {
  Elem t = a;
  Elem x = a;
  for (unsigned i = 1; i < k_; ++i) {
    x = sqr(x);
    t ^= x;
  }
  return t & 1u;
}

std::optional<Elem> Field::solve_wp(Elem c) const {
  // Columns of the GF(2)-linear map e -> e^2 + e, as k rows of an augmented
  // system: row r holds bit r of each column plus bit r of c in bit k.
  std::vector<std::uint32_t> rows(k_, 0);
  for (unsigned col = 0; col < k_; ++col) {
    const Elem e = Elem{1} << col;
    const Elem image = sqr(e) ^ e;
    for (unsigned r = 0; r < k_; ++r)
      if ((image >> r) & 1u) rows[r] |= 1u << col;
  }
  for (unsigned r = 0; r < k_; ++r)
    if ((c >> r) & 1u) rows[r] |= 1u << k_;

  std::vector<int> pivot_col_of_row;
  unsigned rank = 0;
  for (unsigned col = 0; col < k_ && rank < k_; ++col) {
    unsigned piv = rank;
    while (piv < k_ && !((rows[piv] >> col) & 1u)) ++piv;
    if (piv == k_) continue;
    std::swap(rows[piv], rows[rank]);
    for (unsigned r = 0; r < k_; ++r)
      if (r != rank && ((rows[r] >> col) & 1u)) rows[r] ^= rows[rank];
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (unsigned r = rank; r < k_; ++r)
    if ((rows[r] >> k_) & 1u) return std::nullopt;
  Elem e = 0;
  for (unsigned r = 0; r < rank; ++r)
    if ((rows[r] >> k_) & 1u) e |= Elem{1} << pivot_col_of_row[r];
  return e;
}

std::optional<std::uint32_t> Field::log_generator(Elem a) const {
  if (a == 0 || !generator_primitive_) return std::nullopt;
  return gen_log_[a];
}

std::string Field::format(Elem a) const {
  if (a == 0) return "0";
  if (a == 1) return "1";
  if (auto j = log_generator(a)) return *j == 1 ? std::string("g") : "g^" + std::to_string(*j);
  std::string bits = "0b";
  for (int i = static_cast<int>(k_) - 1; i >= 0; --i) bits += ((a >> i) & 1u) ? '1' : '0';
  return bits;
}

}  // namespace qf2
