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

#include "qf2/arith.hpp"

#include <algorithm>
#include <map>

namespace qf2 {

Place Place::finite(const Poly& f) {
  if (f.degree() < 1) throw MathError("place carrier must be nonconstant");
  Poly m = f.monic();
  if (!is_irreducible(m)) throw MathError("place carrier " + m.to_string() + " is not irreducible");
  return Place(std::move(m));
}

Place Place::finite_unchecked(Poly f) { return Place(std::move(f)); }

const Poly& Place::poly() const {
  if (!f_) throw MathError("the infinite place has no carrier polynomial");
  return *f_;
}

bool Place::operator<(const Place& o) const {
  if (!f_) return false;
  if (!o.f_) return true;
  return *f_ < *o.f_;
}

int multiplicity(Poly p, const Poly& f) {
  if (p.is_zero()) return kInfiniteValuation;
  int e = 0;
  while (p.degree() >= f.degree()) {
    auto [q, r] = p.divmod(f);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++e;
  }
  return e;
}

int valuation(const RatFunc& x, const Place& place) {
  if (x.is_zero()) return kInfiniteValuation;
  if (place.is_infinite()) return x.den().degree() - x.num().degree();
  return multiplicity(x.num(), place.poly()) - multiplicity(x.den(), place.poly());
}

std::vector<FactorPower> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw MathError("square-free decomposition of zero");
  std::vector<FactorPower> out;
  Poly f = p.monic();
  if (f.degree() <= 0) return out;
  const Poly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [s, e] : squarefree_decomposition(*f.sqrt())) out.push_back({s, 2 * e});
    return out;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.push_back({z, i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) {
    for (auto& [s, e] : squarefree_decomposition(*c.sqrt())) out.push_back({s, 2 * e});
  }
  return out;
}

namespace {

/// x -> x^q mod m where q = |GF(2^k)|.
Poly frobenius_q(const Poly& x, const Poly& m) {
  Poly r = x;
  for (unsigned j = 0; j < m.field()->k(); ++j) r = r.square() % m;
  return r;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly g) {
  std::vector<std::pair<Poly, int>> out;
  const Poly t = Poly::t(g.field());
  Poly h = t % g;
  for (int i = 1; g.degree() >= 2 * i; ++i) {
    h = frobenius_q(h, g);
    Poly d = gcd(h - t, g);
    if (!d.is_one()) {
      out.emplace_back(d, i);
      g = g / d;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FieldPtr& F = g.field();
  const unsigned steps = F->k() * static_cast<unsigned>(d);
  for (;;) {
    Poly a = Poly::random_below(F, g.degree(), rng);
    if (a.is_constant()) continue;
    // Absolute trace map a + a^2 + ... + a^(2^(kd-1)) mod g.
    Poly tr = a;
    Poly x = a;
    for (unsigned j = 1; j < steps; ++j) {
      x = x.square() % g;
      tr += x;
    }
    Poly u = gcd(tr, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(g / u, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FactorPower> factor(const Poly& p) {
  if (p.is_zero()) throw MathError("cannot factor the zero polynomial");
  // Fixed seed: factorization output is canonical (sorted), so the RNG only
  // affects running time.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::map<Poly, int> acc;
  for (const auto& [s, e] : squarefree_decomposition(p)) {
    for (const auto& [block, d] : distinct_degree(s)) {
      std::vector<Poly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& f : irr) acc[f] += e;
    }
  }
  std::vector<FactorPower> out;
  out.reserve(acc.size());
  for (auto& [f, e] : acc) out.push_back({f, e});
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) throw MathError("irreducibility test needs a nonconstant polynomial");
  const Poly g = p.monic();
  const int n = g.degree();
  if (n == 1) return true;
  const Poly t = Poly::t(g.field());
  Poly h = t;
  for (int i = 1; i <= n / 2; ++i) {
    h = frobenius_q(h, g);
    if (!gcd(h - t, g).is_one()) return false;
  }
  return true;
}

std::vector<Place> finite_support(const RatFunc& x) {
  std::vector<Place> out;
  if (x.is_zero()) return out;
  for (const Poly* p : {&x.num(), &x.den()})
    for (auto& fp : factor(*p)) out.push_back(Place::finite_unchecked(fp.factor));
  std::sort(out.begin(), out.end());
  return out;
}

Poly crt(const std::vector<std::pair<Poly, Poly>>& pairs) {
  if (pairs.empty()) throw MathError("crt needs at least one congruence");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].second.is_zero()) throw MathError("crt modulus is zero");
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!gcd(pairs[i].second, pairs[j].second).is_one())
        throw MathError("crt moduli not coprime: " + pairs[i].second.to_string() + " and " +
                        pairs[j].second.to_string());
    }
  }
  Poly x = pairs.front().first % pairs.front().second;
  Poly m = pairs.front().second;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const auto& [r, mi] = pairs[i];
    const Poly inv = m.invmod(mi);
    const Poly k = ((r - x) * inv) % mi;
    x = x + m * k;
    m = m * mi;
  }
  return x % m;
}

Poly sqrt_mod(const Poly& g, const Poly& f) {
  if (!is_irreducible(f)) throw MathError("sqrt_mod modulus " + f.to_string() + " is not irreducible");
  return sqrt_mod_unchecked(g, f);
}

Poly sqrt_mod_unchecked(const Poly& g, const Poly& f) {
  Poly r = g % f;
  // Squaring has order k*deg(f) on GF(2^k)[t]/(f).
  const unsigned steps = f.field()->k() * static_cast<unsigned>(f.degree()) - 1;
  for (unsigned i = 0; i < steps; ++i) r = r.square() % f;
  return r;
}

Poly reduce_mod(const RatFunc& x, const Poly& modulus) {
  if (x.den().is_one()) return x.num() % modulus;
  return (x.num() * x.den().invmod(modulus)) % modulus;
}

Poly random_irreducible(const FieldPtr& field, int d, std::mt19937_64& rng) {
  for (;;) {
    Poly p = Poly::random_monic(field, d, rng);
    if (is_irreducible(p)) return p;
  }
}

}  // namespace qf2
