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

#include <cmath>
#include <map>
#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "lemma_oracle.hpp"
#include "oracles.hpp"
#include "qf2/parse.hpp"
#include "qf2/quaternary.hpp"

using namespace qf2;

namespace {

RatFunc R(const FieldPtr& F, const char* s) { return parse_ratfunc(F, s); }
Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

Vec4 vec(const FieldPtr& F, const char* a, const char* b, const char* c, const char* d) {
  return {R(F, a), R(F, b), R(F, c), R(F, d)};
}

/// Q1(T v) = s Q2(v) as quadratic forms: compared on the basis vectors and
/// all pair sums.
bool similar_via(const QuaternaryForm& q1, const Mat4& T, const RatFunc& s, const QuaternaryForm& q2) {
  const FieldPtr& F = q1.field();
  std::vector<Vec4> probes;
  for (int i = 0; i < 4; ++i) {
    probes.push_back(unit_vec(F, i));
    for (int j = i + 1; j < 4; ++j) {
      Vec4 v = unit_vec(F, i);
      v[static_cast<std::size_t>(j)] = RatFunc::one(F);
      probes.push_back(v);
    }
  }
  for (const Vec4& v : probes)
    if (q1.evaluate(T.apply(v)) != s * q2.evaluate(v)) return false;
  return true;
}

QuaternaryForm random_gram(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  QuaternaryForm q;
  for (auto& row : q.gram) row.fill(RatFunc::zero(F));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) q.gram[i][j] = RatFunc(Poly::random_below(F, deg + 1, rng));
  return q;
}

/// The constraints of a search spec, checked coefficient by coefficient.
bool meets(const IrreducibleSearchSpec& spec, const Poly& h) {
  if (!oracle::irreducible_by_trial_division(h)) return false;
  if (!spec.m.is_zero() && !spec.m.is_constant() && !((h + spec.a) % spec.m).is_zero()) return false;
  if (spec.parity && static_cast<unsigned>(h.degree() % 2) != *spec.parity) return false;
  for (int i = 0; i < spec.top_len; ++i)
    if (h.coeff(h.degree() - i) != spec.top.coeff(i)) return false;
  for (const Poly& f : spec.avoid)
    if (f.monic() == h.monic()) return false;
  return true;
}

/// c is represented by both a1 N(a2) and a3 N(a4) at f, and at infinity
/// through the inverted variable; decided by the lemma oracle.
bool common_at_lemma(const Poly& a1, const RatFunc& a2, const Poly& a3, const RatFunc& a4, const RatFunc& c,
                     const Place& f) {
  if (f.is_infinite()) {
    const FieldPtr& F = a1.field();
    const Place s = Place::finite_unchecked(Poly::t(F));
    return oracle::lemma_represents(RatFunc(a1).invert_variable(), a2.invert_variable(), c.invert_variable(), s) &&
           oracle::lemma_represents(RatFunc(a3).invert_variable(), a4.invert_variable(), c.invert_variable(), s);
  }
  return oracle::lemma_represents(RatFunc(a1), a2, c, f) && oracle::lemma_represents(RatFunc(a3), a4, c, f);
}

}  // namespace

TEST_CASE("canonicalize: forms already in canonical shape") {
  auto F = Field::make(1);
  const QuaternaryForm q = QuaternaryForm::from_coefficients(R(F, "t^2+t+1"), R(F, "t"), R(F, "1"), R(F, "1/t"));
  auto out = canonicalize(q);
  REQUIRE(std::holds_alternative<CanonicalForm>(out));
  const CanonicalForm& c = std::get<CanonicalForm>(out);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      CHECK(c.transform.col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] ==
            (i == j ? RatFunc::one(F) : RatFunc::zero(F)));
  CHECK(c.a1 == R(F, "t^2+t+1"));
  CHECK(c.a2 == R(F, "t"));
  CHECK(c.a3 == R(F, "1"));
  CHECK(c.a4 == R(F, "1/t"));
}

TEST_CASE("canonicalize: hyperbolic pairs short-circuit") {
  auto F = Field::make(1);
  QuaternaryForm q;
  for (auto& row : q.gram) row.fill(RatFunc::zero(F));
  q.gram[0][1] = RatFunc::one(F);
  q.gram[2][3] = RatFunc::one(F);
  auto out = canonicalize(q);
  REQUIRE(std::holds_alternative<EarlyZero>(out));
  const Vec4 v = std::get<EarlyZero>(out).vector;
  CHECK(v[0] == RatFunc::one(F));
  CHECK(v[1].is_zero());
  CHECK(v[2].is_zero());
  CHECK(v[3].is_zero());
}

TEST_CASE("canonicalize: random regular grams") {
  std::mt19937_64 rng(41);
  auto F = Field::make(1);
  int canonical = 0, early = 0, degenerate = 0;
  for (int i = 0; i < 300; ++i) {
    const QuaternaryForm q = random_gram(F, 2, rng);
    try {
      auto out = canonicalize(q);
      if (auto* ez = std::get_if<EarlyZero>(&out)) {
        ++early;
        CHECK_FALSE(is_zero(ez->vector));
        CHECK(q.evaluate(ez->vector).is_zero());
        continue;
      }
      ++canonical;
      const CanonicalForm& c = std::get<CanonicalForm>(out);
      CHECK(similar_via(q, c.transform, c.scale, QuaternaryForm::from_coefficients(c.a1, c.a2, c.a3, c.a4)));
    } catch (const DegenerateForm& e) {
      ++degenerate;
      // Radical vectors are polar-orthogonal to everything.
      for (const Vec4& r : e.radical())
        for (int k = 0; k < 4; ++k) CHECK(q.polar(r, unit_vec(F, k)).is_zero());
    }
  }
  CHECK(canonical > 100);
  CHECK(early > 0);
  CHECK(degenerate > 0);
}

TEST_CASE("normalize_coefficients examples") {
  auto F = Field::make(1);
  {
    const RatFunc a1 = R(F, "t^2*(t+1)"), a2 = R(F, "t"), a3 = R(F, "t^2"), a4 = R(F, "1");
    const NormalizedForm n = normalize_coefficients(a1, a2, a3, a4);
    CHECK(n.a1 == P(F, "t+1"));
    CHECK(n.a3 == P(F, "1"));
    CHECK(n.a2 == R(F, "t"));
    CHECK(n.a4 == R(F, "1"));
    CHECK(similar_via(QuaternaryForm::from_coefficients(a1, a2, a3, a4), n.transform, n.scale, n.form()));
  }
  {
    const NormalizedForm n = normalize_coefficients(R(F, "t+1"), R(F, "t"), R(F, "t"), R(F, "1/t"));
    CHECK(n.a1 == P(F, "t+1"));
    CHECK(n.a3 == P(F, "t"));
    CHECK(n.scale == R(F, "1"));
    const Mat4 I = Mat4::identity(F);
    for (std::size_t j = 0; j < 4; ++j) CHECK(n.transform.col[j] == I.col[j]);
  }
  {
    const RatFunc a2 = R(F, "t^2");
    const NormalizedForm n = normalize_coefficients(R(F, "t^2+t+1"), a2, R(F, "1"), R(F, "1"));
    CHECK(n.a2 == R(F, "t"));
    // t^2 = t + (t^2 + t): a shift by x^2 + x.
    CHECK((n.a2 + a2) == R(F, "t").wp());
  }
  CHECK_THROWS_AS(normalize_coefficients(R(F, "0"), R(F, "t"), R(F, "1"), R(F, "1")), MathError);
}

TEST_CASE("normalize_coefficients: random pullback identity") {
  std::mt19937_64 rng(42);
  for (unsigned k : {1u, 2u}) {
    auto F = Field::make(k);
    for (int i = 0; i < 150; ++i) {
      auto rf = [&] {
        return RatFunc(Poly::random_of_degree(F, static_cast<int>(rng() % 4), rng),
                       Poly::random_monic(F, static_cast<int>(rng() % 3), rng));
      };
      const RatFunc a1 = rf(), a2 = rf(), a3 = rf(), a4 = rf();
      const NormalizedForm n = normalize_coefficients(a1, a2, a3, a4);
      CHECK(gcd(n.a1, n.a3).is_one());
      for (const Poly* a : {&n.a1, &n.a3})
        for (const auto& fp : factor(*a)) CHECK(fp.exponent == 1);
      CHECK(similar_via(QuaternaryForm::from_coefficients(a1, a2, a3, a4), n.transform, n.scale, n.form()));
    }
  }
}

TEST_CASE("euler_phi and wan_degree") {
  auto F = Field::make(1);
  CHECK(euler_phi(P(F, "1")) == 1);
  CHECK(euler_phi(P(F, "t")) == 1);
  CHECK(euler_phi(P(F, "t^2+t+1")) == 3);
  CHECK(euler_phi(P(F, "t^2")) == 2);
  CHECK(euler_phi(P(F, "t*(t+1)*(t^2+t+1)")) == 3);
  CHECK_THROWS_AS(euler_phi(Poly::t(F).pow(70)), MathError);
  IrreducibleSearchSpec spec{P(F, "t"), P(F, "t^2+t+1"), 0u, P(F, "1"), 2, {}};
  // 2^(N/2) > 3 * 4 * 3 = 36 at N = 12.
  CHECK(wan_degree(spec) == 12);

  // Moduli whose Phi does not fit in 64 bits still get a degree.
  IrreducibleSearchSpec big{P(F, "1"), P(F, "t^2+t+1").pow(40), 0u, P(F, "1"), 2, {}};
  CHECK_THROWS_AS(euler_phi(big.m), MathError);
  // log2 Phi = 78 + log2(3), plus 2 top bits and log2(81): N/2 > 87.9.
  CHECK(wan_degree(big) == 176);
}

TEST_CASE("find_irreducible_in_class examples") {
  auto F = Field::make(1);
  std::mt19937_64 rng(43);
  {
    const IrreducibleSearchSpec spec{P(F, "1"), P(F, "t"), std::nullopt, Poly(F), 0, {}};
    CHECK(find_irreducible_in_class(spec, rng, 2) == P(F, "t^2+t+1"));
  }
  {
    const IrreducibleSearchSpec spec{P(F, "t"), P(F, "t^2+t+1"), 0u, P(F, "1"), 2, {P(F, "t^2+t+1")}};
    CHECK(meets(spec, P(F, "t^6+t+1")));
    for (int i = 0; i < 20; ++i) {
      const Poly h = find_irreducible_in_class(spec, rng, 2);
      CHECK(meets(spec, h));
    }
    CHECK(meets(spec, find_irreducible_in_class(spec, rng)));
  }
  {
    const IrreducibleSearchSpec spec{Poly(F), P(F, "1"), 1u, Poly(F), 0, {}};
    const Poly h = find_irreducible_in_class(spec, rng, 3);
    CHECK(h.degree() == 3);
    CHECK(meets(spec, h));
  }
  CHECK_THROWS_AS(find_irreducible_in_class({P(F, "t"), P(F, "t^2"), std::nullopt, Poly(F), 0, {}}, rng), MathError);
  CHECK_THROWS_AS(find_irreducible_in_class({P(F, "1"), P(F, "t"), std::nullopt, P(F, "t"), 2, {}}, rng), MathError);
}

TEST_CASE("irreducible counts in residue classes respect the Wan bound") {
  auto F = Field::make(1);
  for (int M = 1; M <= 3; ++M) {
    oracle::for_each_monic(F, M, [&](const Poly& m) {
      const double phi = static_cast<double>(euler_phi(m));
      for (int N = 1; N <= 10; ++N) {
        std::map<Poly, int> counts;
        for (const Poly& h : oracle::irreducibles_of_degree(F, N)) ++counts[h % m];
        oracle::for_each_poly_below(F, M, [&](const Poly& a) {
          if (!gcd(a, m).is_one()) return;
          const double S = counts.count(a) ? counts[a] : 0;
          const double main = std::pow(2.0, N) / (phi * N);
          CHECK(std::abs(S - main) <= (M + 1) * std::pow(2.0, N / 2.0) / N);
        });
      }
    });
  }
}

TEST_CASE("find_irreducible_in_class on random satisfiable specs") {
  std::mt19937_64 rng(44);
  for (unsigned k : {1u, 2u}) {
    auto F = Field::make(k);
    const int count = k == 1 ? 700 : 300;
    for (int i = 0; i < count; ++i) {
      IrreducibleSearchSpec spec;
      spec.m = Poly::random_monic(F, static_cast<int>(rng() % 4), rng);
      do {
        spec.a = Poly::random_below(F, std::max(spec.m.degree(), 1), rng);
      } while (!spec.m.is_constant() && !gcd(spec.a, spec.m).is_one());
      if (rng() % 2) spec.parity = static_cast<unsigned>(rng() % 2);
      spec.top_len = static_cast<int>(rng() % 3);
      if (spec.top_len > 0) spec.top = Poly::random_of_degree(F, 0, rng) + Poly::random_below(F, spec.top_len, rng).shift(1).truncate(spec.top_len);
      spec.top = spec.top.truncate(spec.top_len);
      if (spec.top_len > 0 && spec.top.coeff(0) == 0) spec.top += Poly::constant(F, 1);
      if (rng() % 2) spec.avoid.push_back(random_irreducible(F, 1 + static_cast<int>(rng() % 2), rng));
      std::optional<int> start;
      if (rng() % 2) start = 1;
      const Poly h = find_irreducible_in_class(spec, rng, start);
      CHECK(meets(spec, h));
    }
  }
}

TEST_CASE("find_common_value on the worked example") {
  auto F = Field::make(1);
  std::mt19937_64 rng(45);
  const Poly a1 = P(F, "t^2+t+1"), a3 = P(F, "1");
  const RatFunc a2 = R(F, "t"), a4 = R(F, "1");
  auto out = find_common_value(a1, a2, a3, a4, rng);
  REQUIRE(std::holds_alternative<CommonValue>(out));
  const CommonValue& cv = std::get<CommonValue>(out);
  REQUIRE(cv.forced_places.size() == 1);
  CHECK(cv.forced_places[0] == a1);
  CHECK(cv.value == a1 * cv.tail);
  std::vector<Place> places = {Place::finite(a1), Place::infinite()};
  if (cv.tail.degree() > 0) places.push_back(Place::finite(cv.tail));
  for (const Place& p : places) CHECK(common_at_lemma(a1, a2, a3, a4, RatFunc(cv.value), p));

  // The tail t^6 + t + 1 is admissible.
  const Poly h = P(F, "t^6+t+1");
  for (const Place& p : {Place::finite(a1), Place::finite(h), Place::infinite()})
    CHECK(common_at_lemma(a1, a2, a3, a4, RatFunc(a1 * h), p));

  // Forcing a nonconstant tail still gives a valid common value.
  CommonValueOptions opts;
  opts.allow_constant_tail = false;
  opts.start_degree = 2;
  auto out2 = find_common_value(a1, a2, a3, a4, rng, opts);
  REQUIRE(std::holds_alternative<CommonValue>(out2));
  const CommonValue& cv2 = std::get<CommonValue>(out2);
  CHECK(cv2.tail.degree() >= 2);
  // The tail need not be prime; check each of its places.
  std::vector<Place> places2 = {Place::finite(a1), Place::infinite()};
  for (const auto& fp : factor(cv2.tail)) places2.push_back(Place::finite(fp.factor));
  for (const Place& p : places2) CHECK(common_at_lemma(a1, a2, a3, a4, RatFunc(cv2.value), p));
}

TEST_CASE("find_common_value: identical and obstructed forms") {
  auto F = Field::make(1);
  std::mt19937_64 rng(46);
  auto same = find_common_value(P(F, "1"), R(F, "t"), P(F, "1"), R(F, "t"), rng);
  REQUIRE(std::holds_alternative<CommonValue>(same));
  CHECK(std::get<CommonValue>(same).forced_places.empty());

  // Any verdict here must come with a valid certificate.
  const Poly f = P(F, "t^2+t+1");
  REQUIRE(symbol(R(F, "t"), Place::finite(f)) == 1);
  auto obstructed = find_common_value(f, R(F, "t"), P(F, "1"), R(F, "t^3+t+t^2"), rng);
  if (std::holds_alternative<AnisotropyCertificate>(obstructed)) {
    const auto& cert = std::get<AnisotropyCertificate>(obstructed);
    CHECK(cert.check());
  }
  // a2 = a4 = 1 is unramified everywhere with [1, f) = 1 at odd-degree f.
  const Poly g = P(F, "t");
  REQUIRE(symbol(R(F, "1"), Place::finite(g)) == 1);
  auto cert_out = find_common_value(g, R(F, "1"), P(F, "1"), R(F, "1"), rng);
  REQUIRE(std::holds_alternative<AnisotropyCertificate>(cert_out));
  const auto& cert = std::get<AnisotropyCertificate>(cert_out);
  CHECK(cert.check());
  CHECK(cert.kind == AnisotropyCertificate::Kind::kUnramified);
  CHECK_FALSE(quaternary_isotropic_odd_place(RatFunc(g), R(F, "1"), R(F, "1"), R(F, "1"), cert.place));
  CHECK_FALSE(oracle::has_small_zero_f2(QuaternaryForm::from_coefficients(R(F, "t"), R(F, "1"), R(F, "1"), R(F, "1")), 4));
}

TEST_CASE("solve_quaternary on the worked example") {
  auto F = Field::make(1);
  std::mt19937_64 rng(47);
  const QuaternaryForm q = QuaternaryForm::from_coefficients(R(F, "t^2+t+1"), R(F, "t"), R(F, "1"), R(F, "1"));
  CHECK(q.evaluate(vec(F, "t^3+t^2+1", "t", "t^4+1", "t^3")).is_zero());
  const QuaternaryResult res = solve_quaternary(q, rng);
  REQUIRE(res.status == QuaternaryResult::Status::kIsotropic);
  REQUIRE(res.zero);
  CHECK_FALSE(is_zero(*res.zero));
  CHECK(q.evaluate(*res.zero).is_zero());

  // The same form with a nonconstant tail forced through the binary solves.
  QuaternaryOptions opts;
  opts.common.allow_constant_tail = false;
  opts.common.start_degree = 6;
  const QuaternaryResult res2 = solve_quaternary(q, rng, opts);
  REQUIRE(res2.status == QuaternaryResult::Status::kIsotropic);
  CHECK(q.evaluate(*res2.zero).is_zero());
  REQUIRE(res2.common_value);
  CHECK(res2.common_value->tail.degree() >= 6);
}

TEST_CASE("solve_quaternary: trivial shapes") {
  auto F = Field::make(2);
  std::mt19937_64 rng(48);
  const QuaternaryForm q = QuaternaryForm::from_coefficients(R(F, "t+g"), R(F, "1/t"), R(F, "t+g"), R(F, "1/t"));
  const QuaternaryResult res = solve_quaternary(q, rng);
  REQUIRE(res.status == QuaternaryResult::Status::kIsotropic);
  CHECK(q.evaluate(*res.zero).is_zero());
  // a2 = x^2 + x + a2': isotropic binary part.
  const QuaternaryForm q2 = QuaternaryForm::from_coefficients(R(F, "t"), R(F, "t^2+t"), R(F, "1"), R(F, "1/t"));
  const QuaternaryResult res2 = solve_quaternary(q2, rng);
  REQUIRE(res2.status == QuaternaryResult::Status::kIsotropic);
  CHECK(q2.evaluate(*res2.zero).is_zero());
}

TEST_CASE("solve_quaternary: degenerate forms") {
  auto F = Field::make(1);
  std::mt19937_64 rng(49);
  QuaternaryForm diag;
  for (auto& row : diag.gram) row.fill(RatFunc::zero(F));
  diag.gram[0][0] = R(F, "1");
  diag.gram[1][1] = R(F, "t");
  diag.gram[2][2] = R(F, "t^2+1");
  diag.gram[3][3] = R(F, "t^3");
  auto r1 = solve_quaternary(diag, rng);
  REQUIRE(r1.status == QuaternaryResult::Status::kIsotropic);
  CHECK(diag.evaluate(*r1.zero).is_zero());

  QuaternaryForm rank2;
  for (auto& row : rank2.gram) row.fill(RatFunc::zero(F));
  rank2.gram[0][0] = R(F, "1");
  rank2.gram[0][1] = R(F, "1");
  rank2.gram[1][1] = R(F, "t");
  rank2.gram[2][2] = R(F, "t");
  rank2.gram[3][3] = R(F, "t^2+t+1");
  CHECK_THROWS_AS(canonicalize(rank2), DegenerateForm);
  auto r2 = solve_quaternary(rank2, rng);
  REQUIRE(r2.status == QuaternaryResult::Status::kIsotropic);
  CHECK_FALSE(is_zero(*r2.zero));
  CHECK(rank2.evaluate(*r2.zero).is_zero());
}

TEST_CASE("solve_quaternary on random regular forms agrees with brute force") {
  auto F = Field::make(1);
  std::mt19937_64 rng(50);
  int iso = 0, aniso = 0, tried = 0;
  while (tried < 200) {
    const QuaternaryForm q = random_gram(F, 3, rng);
    try {
      (void)canonicalize(q);
    } catch (const DegenerateForm&) {
      continue;
    }
    ++tried;
    const QuaternaryResult res = solve_quaternary(q, rng);
    REQUIRE(res.status != QuaternaryResult::Status::kBudgetExhausted);
    if (res.status == QuaternaryResult::Status::kIsotropic) {
      ++iso;
      CHECK_FALSE(is_zero(*res.zero));
      CHECK(q.evaluate(*res.zero).is_zero());
    } else {
      ++aniso;
      REQUIRE(res.certificate);
      CHECK(res.certificate->check());
      if (res.certificate->kind == AnisotropyCertificate::Kind::kUnramified && res.certificate->place.is_finite()) {
        const auto& c = *res.certificate;
        CHECK_FALSE(quaternary_isotropic_odd_place(RatFunc(c.a1), c.a2, RatFunc(c.a3), c.a4, c.place));
      }
      CHECK_FALSE(oracle::has_small_zero_f2(q, 4));
      // Exhaustive local confirmation on the input form itself.
      const auto mf = oracle::MaskForm::from(q);
      const Place& p = res.certificate->place;
      const auto lvl = p.is_infinite() ? oracle::anisotropic_level(mf.at_infinity(3), 0b10, 12)
                                       : oracle::anisotropic_level(mf, oracle::to_mask(p.poly()), 12);
      CHECK(lvl.has_value());
    }
  }
  CHECK(iso > 0);
  CHECK(aniso > 0);
  MESSAGE("isotropic " << iso << ", anisotropic " << aniso);
}

TEST_CASE("solve_quaternary is deterministic for a fixed seed") {
  auto F = Field::make(2);
  const QuaternaryForm q = QuaternaryForm::from_coefficients(R(F, "t^2+g"), R(F, "t^3+1"), R(F, "t+1"), R(F, "g/t"));
  std::mt19937_64 r1(51), r2(51);
  const QuaternaryResult a = solve_quaternary(q, r1), b = solve_quaternary(q, r2);
  REQUIRE(a.status == b.status);
  if (a.zero) {
    CHECK(q.evaluate(*a.zero).is_zero());
    for (std::size_t i = 0; i < 4; ++i) CHECK((*a.zero)[i] == (*b.zero)[i]);
  }
}

TEST_CASE("exhaustive local checker") {
  auto F = Field::make(1);
  // t N(1) + N(1) has no zero over F_2((t)); a hyperbolic plane always does.
  const auto aniso = oracle::MaskForm::from(QuaternaryForm::from_coefficients(R(F, "t"), R(F, "1"), R(F, "1"), R(F, "1")));
  CHECK(oracle::anisotropic_level(aniso, 0b10, 8).has_value());
  CHECK_FALSE(oracle::anisotropic_level(aniso, 0b11, 8).has_value());
  const auto hyp = oracle::MaskForm::from(QuaternaryForm::from_coefficients(R(F, "t"), R(F, "0"), R(F, "1"), R(F, "1")));
  CHECK_FALSE(oracle::anisotropic_level(hyp, 0b10, 8).has_value());
  // At infinity, with s = 1/t: t N(1) + N(1) becomes s^-1 N(1) + N(1).
  CHECK(oracle::anisotropic_level(aniso.at_infinity(1), 0b10, 8).has_value());

  // x^2 + x y + y^2 = t has no solution mod t^2; = 1 lifts to any power.
  CHECK_FALSE(oracle::binary_solvable_mod_power(1, 1, 1, 0b10, 0b10, 2));
  CHECK(oracle::binary_solvable_mod_power(1, 1, 1, 1, 0b111, 5));
}
