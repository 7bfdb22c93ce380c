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


#include "qf2/quaternion.hpp"

#include <algorithm>
#include <set>

namespace qf2 {

namespace {

// Elements p + q i of the quadratic subalgebra K = F(i).
struct KElem {
  RatFunc p, q;
};

KElem kmul(const KElem& x, const KElem& y, const RatFunc& a) {
  const RatFunc qs = x.q * y.q;
  return {x.p * y.p + qs * a, x.p * y.q + x.q * y.p + qs};
}

KElem kadd(const KElem& x, const KElem& y) { return {x.p + y.p, x.q + y.q}; }

// i -> i + 1; j k = sigma(k) j.
KElem sigma(const KElem& x) { return {x.p + x.q, x.q}; }

RatFunc knorm(const KElem& x, const RatFunc& a) { return x.p.square() + x.p * x.q + a * x.q.square(); }

void require_same(const Quaternion& p, const Quaternion& q) {
  if (!(p.algebra == q.algebra)) throw MathError("quaternions from different algebras");
}

Quaternion from_k(const QuaternionAlgebra& A, const KElem& alpha, const KElem& beta) {
  return Quaternion{A, {alpha.p, alpha.q, beta.p, beta.q}};
}

bool locally_split(const QuaternionAlgebra& A, const Place& p) { return norm_residue_symbol(A.a, A.b, p) == 0; }

}  // namespace

Quaternion Quaternion::scalar(const QuaternionAlgebra& A, const RatFunc& s) {
  const RatFunc z = RatFunc::zero(A.field());
  return Quaternion{A, {s, z, z, z}};
}

Quaternion Quaternion::basis(const QuaternionAlgebra& A, int index) {
  if (index < 0 || index > 3) throw MathError("quaternion basis index out of range");
  Quaternion x = scalar(A, RatFunc::zero(A.field()));
  x.coords[static_cast<std::size_t>(index)] = RatFunc::one(A.field());
  return x;
}

bool Quaternion::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const RatFunc& c) { return c.is_zero(); });
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  require_same(p, q);
  Quaternion out = p;
  for (std::size_t i = 0; i < 4; ++i) out.coords[i] += q.coords[i];
  return out;
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  require_same(p, q);
  const RatFunc& a = p.algebra.a;
  const KElem al{p.coords[0], p.coords[1]}, be{p.coords[2], p.coords[3]};
  const KElem ga{q.coords[0], q.coords[1]}, de{q.coords[2], q.coords[3]};
  // (al + be j)(ga + de j) = al ga + b be sigma(de) + (al de + be sigma(ga)) j
  KElem twisted = kmul(be, sigma(de), a);
  twisted.p *= p.algebra.b;
  twisted.q *= p.algebra.b;
  const KElem first = kadd(kmul(al, ga, a), twisted);
  return from_k(p.algebra, first, kadd(kmul(al, de, a), kmul(be, sigma(ga), a)));
}

RatFunc nrd(const Quaternion& x) {
  const RatFunc& a = x.algebra.a;
  return knorm({x.coords[0], x.coords[1]}, a) + x.algebra.b * knorm({x.coords[2], x.coords[3]}, a);
}

Quaternion conjugate(const Quaternion& x) {
  Quaternion out = x;
  out.coords[0] += x.coords[1];
  return out;
}

std::vector<Place> ramified_places(const QuaternionAlgebra& A) {
  if (A.b.is_zero()) throw MathError("quaternion algebra needs b != 0");
  std::set<Place> candidates;
  for (const Place& p : finite_support(A.a)) candidates.insert(p);
  for (const Place& p : finite_support(A.b)) candidates.insert(p);
  candidates.insert(Place::infinite());
  std::vector<Place> out;
  if (A.a.is_zero()) return out;
  for (const Place& p : candidates)
    if (!locally_split(A, p)) out.push_back(p);
  return out;
}

SplitResult is_split(const QuaternionAlgebra& A, std::mt19937_64& rng, const BinarySolveOptions& options) {
  if (!ramified_places(A).empty()) return {false, std::nullopt};
  const FieldPtr& F = A.field();
  std::optional<Quaternion> w;
  if (auto g = wp_solve_rational(A.a)) {
    // (i + g)^2 + (i + g) = 0.
    w = Quaternion::basis(A, 1) + Quaternion::scalar(A, *g);
  } else {
    // b N(x + y i) = 1, so nrd(1 + (x + y i) j) = 1 + 1.
    const NormEquation eq{BinaryNormForm{A.b, A.a}, RatFunc::one(F)};
    const BinarySolution s = solve_binary(eq, rng, options);
    const RatFunc one = RatFunc::one(F);
    w = Quaternion{A, {one, RatFunc::zero(F), s.x, s.y}};
  }
  if (w->is_zero() || !nrd(*w).is_zero()) throw MathError("internal error: split witness failed verification");
  return {true, w};
}

QuaternionAlgebra construct_ramified(const std::vector<Place>& places, const FieldPtr& F, std::mt19937_64& rng) {
  if (places.size() % 2 != 0) throw MathError("ramification set must have even size");
  const std::set<Place> want(places.begin(), places.end());
  if (want.size() != places.size()) throw MathError("ramification set has repeated places");
  if (want.empty()) return QuaternionAlgebra{RatFunc::zero(F), RatFunc::one(F)};

  // At infinity the parity takes care of itself.
  std::vector<std::pair<Poly, Poly>> residues;
  Poly modulus = Poly::constant(F, 1);
  std::vector<Poly> finite;
  for (const Place& p : want) {
    if (p.is_infinite()) continue;
    const Poly& f = p.poly();
    Poly r;
    do {
      r = Poly::random_below(F, f.degree(), rng);
    } while (symbol(RatFunc(r), p) != 1);
    residues.emplace_back(r, f);
    modulus *= f;
    finite.push_back(f);
  }
  IrreducibleSearchSpec spec;
  spec.a = crt(residues);
  spec.m = modulus;
  spec.avoid = finite;
  const Poly b = find_irreducible_in_class(spec, rng, 1);
  QuaternionAlgebra A{RatFunc(b), RatFunc(modulus)};
  const std::vector<Place> got = ramified_places(A);
  if (std::set<Place>(got.begin(), got.end()) != want)
    throw MathError("internal error: constructed algebra has the wrong ramification");
  return A;
}

Quaternion embed_subfield(const QuaternionAlgebra& A, const RatFunc& c, std::mt19937_64& rng,
                          const QuaternaryOptions& options) {
  const FieldPtr& F = A.field();
  auto finish = [&](const Quaternion& u) {
    if (u * u + u != Quaternion::scalar(A, c)) throw MathError("internal error: embedded element failed verification");
    return u;
  };
  if (auto g = wp_solve_rational(A.a + c)) return finish(Quaternion::basis(A, 1) + Quaternion::scalar(A, *g));

  const RatFunc one = RatFunc::one(F);
  const QuaternaryForm Q = QuaternaryForm::from_coefficients(one, A.a + c, A.b, A.a);
  const QuaternaryResult res = solve_quaternary(Q, rng, options);
  if (res.status == QuaternaryResult::Status::kAnisotropic) {
    if (!res.certificate) throw MathError("internal error: anisotropic verdict without a certificate");
    throw NotSplitByExtension(*res.certificate);
  }
  if (res.status != QuaternaryResult::Status::kBudgetExhausted && !res.zero)
    throw MathError("internal error: isotropic verdict without a zero");
  if (res.status == QuaternaryResult::Status::kBudgetExhausted) throw BudgetExhausted();

  Vec4 v = *res.zero;
  if (v[1].is_zero()) {
    // Move along a vector w with B(v, w) != 0 to a zero with v[1] != 0.
    auto bil = [&](const Vec4& w) { return Q.polar(v, w); };
    const Vec4 e2 = unit_vec(F, 1);
    std::optional<Vec4> w;
    if (!bil(e2).is_zero()) {
      w = e2;
    } else {
      for (int j : {0, 2, 3}) {
        if (bil(unit_vec(F, j)).is_zero()) continue;
        Vec4 cand = e2;
        cand[static_cast<std::size_t>(j)] = one;
        w = cand;
        break;
      }
    }
    if (!w) throw MathError("internal error: zero in the radical of a regular form");
    const RatFunc qw = Q.evaluate(*w);
    if (qw.is_zero()) {
      v = *w;
    } else {
      const RatFunc s = bil(*w) / qw;
      for (std::size_t i = 0; i < 4; ++i) v[i] += s * (*w)[i];
    }
  }
  const RatFunc& m2 = v[1];
  return finish(Quaternion{A, {v[0] / m2, one, v[2] / m2, v[3] / m2}});
}

}  // namespace qf2
