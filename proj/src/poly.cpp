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

#include "qf2/poly.hpp"

#include <algorithm>

namespace qf2 {

namespace {

const FieldPtr& pick_field(const Poly& a, const Poly& b) {
  if (a.field()) return a.field();
  if (!b.field()) throw MathError("polynomial without a field");
  return b.field();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) {
  return Poly(std::move(field), std::vector<Elem>{c});
}

Poly Poly::monomial(FieldPtr field, Elem c, int exponent) {
  if (c == 0) return Poly(std::move(field));
  std::vector<Elem> v(static_cast<std::size_t>(exponent) + 1, 0);
  v.back() = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::random_below(FieldPtr field, int bound, std::mt19937_64& rng) {
  std::vector<Elem> v(static_cast<std::size_t>(std::max(bound, 0)));
  for (auto& e : v) e = field->random(rng);
  return Poly(std::move(field), std::move(v));
}

Poly Poly::random_of_degree(FieldPtr field, int d, std::mt19937_64& rng) {
  Poly p = random_below(field, d, rng);
  Elem lead = 0;
  while (lead == 0) lead = field->random(rng);
  p.c_.resize(static_cast<std::size_t>(d) + 1, 0);
  p.c_[static_cast<std::size_t>(d)] = lead;
  return p;
}

Poly Poly::random_monic(FieldPtr field, int d, std::mt19937_64& rng) {
  Poly p = random_below(field, d, rng);
  p.c_.resize(static_cast<std::size_t>(d) + 1, 0);
  p.c_[static_cast<std::size_t>(d)] = 1;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!field_) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  const FieldPtr& f = pick_field(*this, o);
  if (c_.empty() || o.c_.empty()) return Poly(f);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  const Field& F = *f;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Elem a = c_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] ^= F.mul(a, o.c_[j]);
  }
  return Poly(f, std::move(r));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scale(Elem s) const {
  if (s == 0) return Poly(field_);
  std::vector<Elem> r(c_);
  for (auto& e : r) e = field_->mul(e, s);
  return Poly(field_, std::move(r));
}

Poly Poly::shift(int n) const {
  if (c_.empty() || n == 0) return *this;
  if (n > 0) {
    std::vector<Elem> r(static_cast<std::size_t>(n), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r));
  }
  const auto drop = static_cast<std::size_t>(-n);
  if (drop >= c_.size()) return Poly(field_);
  return Poly(field_, std::vector<Elem>(c_.begin() + static_cast<std::ptrdiff_t>(drop), c_.end()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw MathError("polynomial division by zero");
  const FieldPtr& f = pick_field(*this, divisor);
  const int db = divisor.degree();
  if (degree() < db) return {Poly(f), *this};
  const Field& F = *f;
  std::vector<Elem> rem(c_);
  std::vector<Elem> quo(rem.size() - static_cast<std::size_t>(db), 0);
  const Elem inv_lead = F.inv(divisor.lead());
  const bool monic = divisor.lead() == 1;
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    const Elem top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const Elem qc = monic ? top : F.mul(top, inv_lead);
    quo[static_cast<std::size_t>(i - db)] = qc;
    const std::size_t base = static_cast<std::size_t>(i - db);
    for (int j = 0; j <= db; ++j)
      rem[base + static_cast<std::size_t>(j)] ^= F.mul(qc, divisor.c_[static_cast<std::size_t>(j)]);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly Poly::operator%(const Poly& o) const {
  if (degree() < o.degree() && !o.is_zero()) return *this;
  return divmod(o).second;
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scale(field_->inv(c_.back()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> r(c_.size() - 1, 0);
  for (std::size_t i = 1; i < c_.size(); i += 2) r[i - 1] = c_[i];
  return Poly(field_, std::move(r));
}

Poly Poly::square() const {
  if (c_.empty()) return *this;
  std::vector<Elem> r(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = field_->sqr(c_[i]);
  return Poly(field_, std::move(r));
}

std::optional<Poly> Poly::sqrt() const {
  if (c_.empty()) return *this;
  std::vector<Elem> r((c_.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 1) {
      if (c_[i] != 0) return std::nullopt;
    } else {
      r[i / 2] = field_->sqrt(c_[i]);
    }
  }
  return Poly(field_, std::move(r));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::powmod(std::uint64_t e, const Poly& m) const {
  Poly result = constant(m.field(), 1) % m;
  Poly base = *this % m;
  while (e) {
    if (e & 1u) result = result.mulmod(base, m);
    e >>= 1;
    if (e) base = base.square() % m;
  }
  return result;
}

Poly Poly::invmod(const Poly& m) const {
  auto r = xgcd(*this % m, m);
  if (!r.g.is_one()) throw MathError("polynomial not invertible modulo " + m.to_string());
  return r.s % m;
}

Poly Poly::reverse(int n) const {
  if (c_.empty()) return *this;
  if (n < degree()) throw MathError("reverse length below degree");
  std::vector<Elem> r(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(n) - i] = c_[i];
  return Poly(field_, std::move(r));
}

Poly Poly::truncate(int n) const {
  if (n <= 0) return Poly(field_);
  if (static_cast<std::size_t>(n) >= c_.size()) return *this;
  return Poly(field_, std::vector<Elem>(c_.begin(), c_.begin() + n));
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_->mul(r, x) ^ *it;
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    const std::string cs = field_->format(c);
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs + '*';
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& f = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly u0(f), u1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  const Elem inv = f->inv(r0.lead());
  return {r0.scale(inv), s0.scale(inv), u0.scale(inv)};
}

}  // namespace qf2
