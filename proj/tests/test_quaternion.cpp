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


#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lemma_oracle.hpp"
#include "oracles.hpp"
#include "qf2/parse.hpp"
#include "qf2/quaternion.hpp"

using namespace qf2;

namespace {

RatFunc R(const FieldPtr& F, const char* s) { return parse_ratfunc(F, s); }
Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

RatFunc random_rat(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  Poly den = Poly::random_monic(F, static_cast<int>(rng() % static_cast<unsigned>(deg + 1)), rng);
  return RatFunc(Poly::random_below(F, deg + 1, rng), den);
}

RatFunc random_nonzero_rat(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  for (;;) {
    RatFunc x = random_rat(F, deg, rng);
    if (!x.is_zero()) return x;
  }
}

Quaternion random_quat(const QuaternionAlgebra& A, int deg, std::mt19937_64& rng) {
  Quaternion x = Quaternion::scalar(A, RatFunc::zero(A.field()));
  for (auto& c : x.coords) c = random_rat(A.field(), deg, rng);
  return x;
}

bool oracle_ramified(const QuaternionAlgebra& A, const Place& p) { return oracle::lemma_ramified(A.a, A.b, p); }

std::vector<Place> places_up_to(const FieldPtr& F, int d) {
  std::vector<Place> out;
  for (int e = 1; e <= d; ++e)
    for (const Poly& f : oracle::irreducibles_of_degree(F, e)) out.push_back(Place::finite_unchecked(f));
  out.push_back(Place::infinite());
  return out;
}

std::set<Place> oracle_ramified_set(const QuaternionAlgebra& A, const std::vector<Place>& places) {
  std::set<Place> out;
  for (const Place& p : places)
    if (oracle_ramified(A, p)) out.insert(p);
  return out;
}

std::set<Place> as_set(const std::vector<Place>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("quaternion relations") {
  auto F = Field::make(1);
  const QuaternionAlgebra A{R(F, "t^2+1/t"), R(F, "t+1")};
  const Quaternion one = Quaternion::scalar(A, RatFunc::one(F));
  const Quaternion i = Quaternion::basis(A, 1), j = Quaternion::basis(A, 2), k = Quaternion::basis(A, 3);
  CHECK(i * i == Quaternion::scalar(A, A.a) + i);
  CHECK(j * j == Quaternion::scalar(A, A.b));
  CHECK(i * j == k);
  CHECK(i * j == j * (i + one));
  CHECK(k * k == Quaternion::scalar(A, A.a * A.b));
  CHECK(one * k == k);
  CHECK(k * one == k);

  const QuaternionAlgebra other{R(F, "t"), R(F, "t+1")};
  CHECK_THROWS_AS(quat_mul(i, Quaternion::basis(other, 1)), MathError);
}

TEST_CASE("quaternion product is associative and nrd is multiplicative") {
  for (unsigned k : {1u, 2u}) {
    auto F = Field::make(k);
    std::mt19937_64 rng(100 + k);
    for (int n = 0; n < 500; ++n) {
      const QuaternionAlgebra A{random_rat(F, 2, rng), random_nonzero_rat(F, 2, rng)};
      const Quaternion p = random_quat(A, 2, rng), q = random_quat(A, 2, rng), r = random_quat(A, 1, rng);
      REQUIRE(nrd(p * q) == nrd(p) * nrd(q));
      REQUIRE(p * conjugate(p) == Quaternion::scalar(A, nrd(p)));
      if (n % 5 == 0) REQUIRE((p * q) * r == p * (q * r));
    }
  }
}

TEST_CASE("is_split examples") {
  auto F = Field::make(1);
  std::mt19937_64 rng(7);
  {
    const QuaternionAlgebra A{R(F, "t^2+t"), R(F, "t^3+1")};
    const SplitResult s = is_split(A, rng);
    REQUIRE(s.split);
    CHECK(*s.zero_divisor == Quaternion::basis(A, 1) + Quaternion::scalar(A, R(F, "t")));
    // (i + t)(i + t + 1) = 0
    const Quaternion z = *s.zero_divisor;
    CHECK((z * (z + Quaternion::scalar(A, RatFunc::one(F)))).is_zero());
  }
  {
    const QuaternionAlgebra A{R(F, "t^2+t+1"), R(F, "1")};
    const SplitResult s = is_split(A, rng);
    REQUIRE(s.split);
    CHECK(nrd(*s.zero_divisor).is_zero());
  }
  {
    const QuaternionAlgebra A{R(F, "t^2+t+1"), R(F, "t")};
    CHECK_FALSE(is_split(A, rng).split);
    const auto ram = as_set(ramified_places(A));
    CHECK(ram.size() % 2 == 0);
    CHECK(ram.count(Place::finite(P(F, "t"))) == 1);
    CHECK(ram == oracle_ramified_set(A, places_up_to(F, 2)));
  }
}

TEST_CASE("split test agrees three ways on small algebras") {
  auto F = Field::make(1);
  std::mt19937_64 rng(8);
  const auto places = places_up_to(F, 2);
  std::vector<RatFunc> as, bs;
  oracle::for_each_poly_below(F, 3, [&](const Poly& p) {
    as.emplace_back(p);
    if (!p.is_zero()) bs.emplace_back(p);
  });
  for (const char* s : {"1/t", "1/(t+1)", "t/(t^2+t+1)", "1/(t^2+t)"}) {
    as.push_back(R(F, s));
    bs.push_back(R(F, s));
  }
  int split = 0, nonsplit = 0;
  for (const RatFunc& a : as) {
    for (const RatFunc& b : bs) {
      CAPTURE(a.to_string());
      CAPTURE(b.to_string());
      const QuaternionAlgebra A{a, b};
      const auto ram = as_set(ramified_places(A));
      REQUIRE(ram == oracle_ramified_set(A, places));
      const SplitResult s = is_split(A, rng);
      REQUIRE(s.split == ram.empty());
      if (s.split) {
        ++split;
        REQUIRE_FALSE(s.zero_divisor->is_zero());
        REQUIRE(nrd(*s.zero_divisor).is_zero());
        // The Hilbert equation itself, whatever shortcut is_split took.
        const NormEquation eq{BinaryNormForm{b, a}, RatFunc::one(F)};
        const BinarySolution w = solve_binary(eq, rng);
        REQUIRE(eq.satisfied_by(w.x, w.y));
      } else {
        ++nonsplit;
      }
    }
  }
  MESSAGE("split ", split, ", non-split ", nonsplit);
  CHECK(split > 0);
  CHECK(nonsplit > 0);
}

TEST_CASE("ramification sets have even size") {
  for (unsigned k : {1u, 2u}) {
    auto F = Field::make(k);
    std::mt19937_64 rng(200 + k);
    for (int n = 0; n < 200; ++n) {
      const QuaternionAlgebra A{random_rat(F, 3, rng), random_nonzero_rat(F, 3, rng)};
      const auto ram = ramified_places(A);
      REQUIRE(ram.size() % 2 == 0);
      if (k == 1 && n < 40) {
        // The oracle agrees on every candidate.
        std::vector<Place> cands = finite_support(A.a);
        for (const Place& p : finite_support(A.b)) cands.push_back(p);
        cands.push_back(Place::infinite());
        REQUIRE(as_set(ram) == oracle_ramified_set(A, cands));
      }
    }
  }
}

TEST_CASE("construct_ramified example") {
  auto F = Field::make(1);
  std::mt19937_64 rng(9);
  const QuaternionAlgebra A = construct_ramified({Place::finite(P(F, "t")), Place::finite(P(F, "t+1"))}, F, rng);
  CHECK(A.a == R(F, "t^2+t+1"));
  CHECK(A.b == R(F, "t^2+t"));
  const QuaternionAlgebra E = construct_ramified({}, F, rng);
  CHECK(ramified_places(E).empty());
  CHECK_THROWS_AS(construct_ramified({Place::infinite()}, F, rng), MathError);
  CHECK_THROWS_AS(construct_ramified({Place::infinite(), Place::infinite()}, F, rng), MathError);
}

TEST_CASE("construct_ramified round-trips on every small even set") {
  auto F = Field::make(1);
  std::mt19937_64 rng(10);
  const auto small = places_up_to(F, 2);
  const auto check_places = places_up_to(F, 3);
  REQUIRE(small.size() == 4);
  int count = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<Place> S;
    for (unsigned i = 0; i < 4; ++i)
      if (mask >> i & 1) S.push_back(small[i]);
    const QuaternionAlgebra A = construct_ramified(S, F, rng);
    CHECK(as_set(ramified_places(A)) == as_set(S));
    CHECK(oracle_ramified_set(A, check_places) == as_set(S));
    ++count;
  }
  CHECK(count == 8);

  // Larger residue fields and higher degree places.
  auto F4 = Field::make(2);
  for (int n = 0; n < 20; ++n) {
    std::set<Place> S;
    const int size = 2 * static_cast<int>(1 + rng() % 2);
    while (static_cast<int>(S.size()) < size) {
      if (rng() % 4 == 0) S.insert(Place::infinite());
      else S.insert(Place::finite_unchecked(random_irreducible(F4, 1 + static_cast<int>(rng() % 3), rng)));
    }
    const std::vector<Place> Sv(S.begin(), S.end());
    CHECK(as_set(ramified_places(construct_ramified(Sv, F4, rng))) == S);
  }
}

TEST_CASE("embed_subfield trivial cases") {
  auto F = Field::make(1);
  std::mt19937_64 rng(11);
  const QuaternionAlgebra A{R(F, "t^2+t+1"), R(F, "t")};
  CHECK(embed_subfield(A, A.a, rng) == Quaternion::basis(A, 1));
  const RatFunc g = R(F, "(t^2+1)/t");
  CHECK(embed_subfield(A, A.a + g.square() + g, rng) == Quaternion::basis(A, 1) + Quaternion::scalar(A, g));
  // c = 0 gives idempotents, which a division algebra does not have.
  try {
    embed_subfield(A, RatFunc::zero(F), rng);
    FAIL("expected anisotropy");
  } catch (const NotSplitByExtension& e) {
    CHECK(e.certificate().check());
  }
}

TEST_CASE("embed_subfield on division algebras and splitting fields") {
  for (unsigned k : {1u, 2u}) {
    auto F = Field::make(k);
    std::mt19937_64 rng(300 + k);
    for (int n = 0; n < 25; ++n) {
      std::set<Place> S;
      while (S.size() < 2) {
        if (rng() % 3 == 0) S.insert(Place::infinite());
        else S.insert(Place::finite_unchecked(random_irreducible(F, 1 + static_cast<int>(rng() % 2), rng)));
      }
      const QuaternionAlgebra A = construct_ramified({S.begin(), S.end()}, F, rng);
      // c generates a field at every ramified place: a non-square class at the
      // finite ones, an odd pole at infinity.
      std::vector<std::pair<Poly, Poly>> residues;
      Poly M = Poly::constant(F, 1);
      for (const Place& p : S) {
        if (p.is_infinite()) continue;
        Poly r;
        do {
          r = Poly::random_below(F, p.poly().degree(), rng);
        } while (symbol(RatFunc(r), p) != 1);
        residues.emplace_back(r, p.poly());
        M *= p.poly();
      }
      int dg = static_cast<int>(rng() % 3);
      if (S.count(Place::infinite()) && (M.degree() + dg) % 2 == 0) ++dg;
      const RatFunc c(crt(residues) + M * Poly::random_of_degree(F, dg, rng));
      CAPTURE(A.a.to_string());
      CAPTURE(A.b.to_string());
      CAPTURE(c.to_string());
      const Quaternion u = embed_subfield(A, c, rng);
      CHECK(u * u + u == Quaternion::scalar(A, c));
      CHECK(u.coords[1] == RatFunc::one(F));
    }
  }
}
