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

#include "qf2/quaternary.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qf2 {

namespace {

Vec4 add(const Vec4& u, const Vec4& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]}; }
Vec4 scale(const RatFunc& s, const Vec4& v) { return {s * v[0], s * v[1], s * v[2], s * v[3]}; }

bool has_pole(const RatFunc& x, const Place& p) { return valuation(x, p) < 0; }

/// x = w^2 r with r monic square-free.
std::pair<Poly, Poly> split_square(const Poly& x) {
  const FieldPtr& F = x.field();
  Poly w = Poly::constant(F, F->sqrt(x.lead()));
  Poly r = Poly::constant(F, 1);
  for (const auto& [s, e] : squarefree_decomposition(x)) {
    w *= s.pow(static_cast<unsigned>(e / 2));
    if (e % 2) r *= s;
  }
  return {w, r};
}

}  // namespace

Mat4 Mat4::identity(const FieldPtr& F) { return {{unit_vec(F, 0), unit_vec(F, 1), unit_vec(F, 2), unit_vec(F, 3)}}; }

Vec4 Mat4::apply(const Vec4& v) const {
  Vec4 out = zero_vec(v[0].field() ? v[0].field() : col[0][0].field());
  for (int j = 0; j < 4; ++j)
    if (!v[static_cast<std::size_t>(j)].is_zero()) out = add(out, scale(v[static_cast<std::size_t>(j)], col[static_cast<std::size_t>(j)]));
  return out;
}

Mat4 Mat4::compose(const Mat4& other) const {
  Mat4 out;
  for (std::size_t j = 0; j < 4; ++j) out.col[j] = apply(other.col[j]);
  return out;
}

Vec4 zero_vec(const FieldPtr& F) { return {RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F), RatFunc::zero(F)}; }

Vec4 unit_vec(const FieldPtr& F, int i) {
  Vec4 v = zero_vec(F);
  v[static_cast<std::size_t>(i)] = RatFunc::one(F);
  return v;
}

bool is_zero(const Vec4& v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& x) { return x.is_zero(); });
}

QuaternaryForm QuaternaryForm::from_coefficients(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3,
                                                 const RatFunc& a4) {
  const FieldPtr& F = a1.field();
  QuaternaryForm q;
  for (auto& row : q.gram) row.fill(RatFunc::zero(F));
  q.gram[0][0] = a1;
  q.gram[0][1] = a1;
  q.gram[1][1] = a1 * a2;
  q.gram[2][2] = a3;
  q.gram[2][3] = a3;
  q.gram[3][3] = a3 * a4;
  return q;
}

RatFunc QuaternaryForm::evaluate(const Vec4& v) const {
  RatFunc acc = RatFunc::zero(field());
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = i; j < 4; ++j)
      if (!gram[i][j].is_zero() && !v[j].is_zero()) acc += gram[i][j] * v[i] * v[j];
  }
  return acc;
}

RatFunc QuaternaryForm::polar(const Vec4& u, const Vec4& v) const {
  RatFunc acc = RatFunc::zero(field());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!gram[i][j].is_zero()) acc += gram[i][j] * (u[i] * v[j] + u[j] * v[i]);
  return acc;
}

std::variant<CanonicalForm, EarlyZero> canonicalize(const QuaternaryForm& form) {
  const FieldPtr& F = form.field();
  std::optional<std::pair<int, int>> pair;
  for (int i = 0; i < 4 && !pair; ++i)
    for (int j = i + 1; j < 4 && !pair; ++j)
      if (!form.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) pair = {i, j};
  if (!pair) throw DegenerateForm({unit_vec(F, 0), unit_vec(F, 1), unit_vec(F, 2), unit_vec(F, 3)});

  const auto [i, j] = *pair;
  const Vec4 v1 = unit_vec(F, i);
  const Vec4 v2 = scale(form.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].inverse(), unit_vec(F, j));
  std::vector<Vec4> rest;
  for (int k = 0; k < 4; ++k) {
    if (k == i || k == j) continue;
    const Vec4 e = unit_vec(F, k);
    // Project onto the polar complement of span(v1, v2).
    rest.push_back(add(e, add(scale(form.polar(e, v2), v1), scale(form.polar(e, v1), v2))));
  }
  const RatFunc beta = form.polar(rest[0], rest[1]);
  if (beta.is_zero()) throw DegenerateForm(rest);
  const Vec4 v3 = rest[0];
  const Vec4 v4 = scale(beta.inverse(), rest[1]);

  for (const Vec4* v : {&v1, &v3, &v2, &v4})
    if (form.evaluate(*v).is_zero()) return EarlyZero{*v};
  const RatFunc a1 = form.evaluate(v1), a3 = form.evaluate(v3);
  CanonicalForm out{a1, a1 * form.evaluate(v2), a3, a3 * form.evaluate(v4), {}, RatFunc::one(F)};
  out.transform.col = {v1, scale(a1, v2), v3, scale(a3, v4)};
  return out;
}

NormalizedForm normalize_coefficients(const RatFunc& a1, const RatFunc& a2, const RatFunc& a3, const RatFunc& a4) {
  if (a1.is_zero() || a3.is_zero()) throw MathError("a1 and a3 must be nonzero");
  const FieldPtr& F = a1.field();
  NormalizedForm out;
  out.transform = Mat4::identity(F);

  // One block: a N(b)(x, y) with x, y in columns c0, c0 + 1.
  auto block = [&](const RatFunc& a, const RatFunc& b, std::size_t c0, Poly& a_out, RatFunc& b_out) {
    const MinimizeResult m = minimize(BinaryNormForm{RatFunc::one(F), b});
    b_out = m.form.param;
    // a = n/d: a N(d x, d y) = n d N(x, y); n d = w^2 r: (n d) N(x/w, y/w) = r N(x, y).
    auto [w, r] = split_square(a.num() * a.den());
    const RatFunc s = RatFunc(a.den()) / RatFunc(w);
    // N_b(x + h y, y) = N_min(x, y).
    out.transform.col[c0] = scale(s, unit_vec(F, static_cast<int>(c0)));
    out.transform.col[c0 + 1] = add(scale(s * m.shift.h, unit_vec(F, static_cast<int>(c0))),
                                    scale(s, unit_vec(F, static_cast<int>(c0 + 1))));
    a_out = r;
  };
  Poly r1, r3;
  block(a1, a2, 0, r1, out.a2);
  block(a3, a4, 2, r3, out.a4);
  const Poly g = gcd(r1, r3);
  out.a1 = r1 / g;
  out.a3 = r3 / g;
  out.scale = RatFunc(g);
  return out;
}

namespace {

bool pole_at(const RatFunc& x, const Place& p) {
  if (x.is_zero()) return false;
  return p.is_infinite() ? x.degree() > 0 : has_pole(x, p);
}

/// 0 iff a2 and a4 define the same local extension at p.
unsigned same_extension_symbol(const RatFunc& a2, const RatFunc& a4, const Place& p) {
  const RatFunc d = reduce_pole_at(a2 + a4, p);
  if (pole_at(d, p)) return 1;
  return symbol(d, p);
}

AnisotropyCertificate make_certificate(const Place& p, const Poly& a1, const RatFunc& a2, const Poly& a3,
                                       const RatFunc& a4) {
  AnisotropyCertificate c{p, AnisotropyCertificate::Kind::kUnramified, 0, 0, a1, a3, a2, a4};
  if (pole_at(a2, p) || pole_at(a4, p)) {
    c.kind = AnisotropyCertificate::Kind::kRamified;
    c.first_symbol = same_extension_symbol(a2, a4, p);
    c.second_symbol = norm_residue_symbol(a2, RatFunc(a1) / RatFunc(a3), p);
  } else {
    c.first_symbol = symbol(a2, p);
    c.second_symbol = symbol(a4, p);
  }
  return c;
}

double log2_q(const FieldPtr& F) { return static_cast<double>(F->k()); }

}  // namespace

bool AnisotropyCertificate::check() const {
  const bool ramified = pole_at(a2, place) || pole_at(a4, place);
  if (ramified != (kind == Kind::kRamified)) return false;
  const AnisotropyCertificate fresh = make_certificate(place, a1, a2, a3, a4);
  if (fresh.first_symbol != first_symbol || fresh.second_symbol != second_symbol) return false;
  if (ramified) return first_symbol == 0 && second_symbol == 1;
  const int v = valuation(RatFunc(a1 * a3), place);
  return first_symbol == 1 && second_symbol == 1 && v % 2 != 0;
}

std::uint64_t euler_phi(const Poly& m) {
  if (m.is_zero()) throw MathError("modulus must be nonzero");
  const unsigned k = m.field()->k();
  unsigned __int128 phi = 1;
  for (const auto& [f, e] : factor(m)) {
    const unsigned bits = k * static_cast<unsigned>(f.degree());
    if (bits * static_cast<unsigned>(e) >= 64) throw MathError("Euler phi exceeds 2^63");
    const unsigned __int128 qd = static_cast<unsigned __int128>(1) << bits;
    phi *= (qd - 1) * (static_cast<unsigned __int128>(1) << (bits * static_cast<unsigned>(e - 1)));
    if (phi > (static_cast<unsigned __int128>(1) << 63)) throw MathError("Euler phi exceeds 2^63");
  }
  return static_cast<std::uint64_t>(phi);
}

int wan_degree(const IrreducibleSearchSpec& spec) {
  const FieldPtr& F = spec.m.field() ? spec.m.field() : spec.a.field();
  const int M = std::max(spec.m.degree(), 0);
  // log2 Phi(m) from the factorization; Phi itself may not fit in 64 bits.
  double log_phi = 0;
  if (M > 0) {
    for (const auto& [f, e] : factor(spec.m)) {
      const double bits = log2_q(F) * f.degree();
      log_phi += bits * (e - 1) + bits + std::log2(1.0 - std::exp2(-bits));
    }
  }
  const double rhs = log_phi + log2_q(F) * spec.top_len + std::log2(M + 1.0);
  for (int N = 1;; ++N) {
    if (spec.parity && static_cast<unsigned>(N % 2) != *spec.parity) continue;
    if (log2_q(F) * N / 2.0 > rhs) return N;
  }
}

namespace {

/// Candidate generator for degree D: fixed top coefficients, low part in the
/// residue class. nullopt when degree D is incompatible with the constraints.
struct DegreeClass {
  Poly fixed;  // top part
  Poly base;   // low part, already in the class
  Poly m;
  int free_len = 0;  // degree bound of the multiplier of m
};

std::optional<DegreeClass> degree_class(const IrreducibleSearchSpec& spec, const FieldPtr& F, int D) {
  const int L = spec.top_len;
  for (int i = D + 1; i < L; ++i)
    if (spec.top.coeff(i) != 0) return std::nullopt;
  std::vector<Elem> top(static_cast<std::size_t>(D + 1), 0);
  for (int i = 0; i < std::min(L, D + 1); ++i) top[static_cast<std::size_t>(D - i)] = spec.top.coeff(i);
  DegreeClass c;
  c.fixed = Poly(F, top);
  c.m = spec.m.is_zero() ? Poly::constant(F, 1) : spec.m;
  const int B = D + 1 - std::min(L, D + 1);  // free low coefficients
  const int M = c.m.degree();
  c.base = (spec.a + c.fixed) % c.m;
  if (B < M) {
    if (c.base.degree() >= B) return std::nullopt;
    c.free_len = 0;
  } else {
    c.free_len = B - M;
  }
  // Without top constraints the leading coefficient comes from the sample.
  if (L == 0 && c.free_len == 0 && (c.fixed + c.base).degree() != D) return std::nullopt;
  return c;
}

bool acceptable(const Poly& h, int D, const IrreducibleSearchSpec& spec) {
  if (h.degree() != D || D < 1) return false;
  if (!is_irreducible(h)) return false;
  const Poly mh = h.monic();
  return std::none_of(spec.avoid.begin(), spec.avoid.end(), [&](const Poly& f) { return f.monic() == mh; });
}

}  // namespace

Poly find_irreducible_in_class(const IrreducibleSearchSpec& spec, std::mt19937_64& rng,
                               std::optional<int> start_degree) {
  const FieldPtr& F = spec.m.field() ? spec.m.field() : spec.a.field();
  const Poly m = spec.m.is_zero() ? Poly::constant(F, 1) : spec.m;
  if (!gcd(spec.a % m, m).is_one() && !m.is_constant()) throw MathError("residue is not coprime to the modulus");
  if (spec.top_len > 0 && spec.top.coeff(0) == 0) throw MathError("leading coefficient constraint is zero");
  if (spec.parity && *spec.parity > 1) throw MathError("parity must be 0 or 1");

  const int wan = wan_degree(spec);
  int D = std::max(start_degree.value_or(wan), 1);
  const int step = spec.parity ? 2 : 1;
  if (spec.parity && static_cast<unsigned>(D % 2) != *spec.parity) ++D;
  // Past the Wan degree the class is known to be nonempty; the cap only
  // guards against pathological budgets.
  const int last = std::max(wan, D) + 64;
  for (; D <= last; D += step) {
    auto cls = degree_class(spec, F, D);
    if (!cls) continue;
    const std::uint64_t budget = 64u * static_cast<std::uint64_t>(D) * static_cast<std::uint64_t>(std::max(1, m.degree()));
    const double log2_count = log2_q(F) * cls->free_len;
    if (log2_count <= std::log2(static_cast<double>(budget))) {
      // Small class: enumerate all of it in random order.
      const std::uint64_t count = std::uint64_t{1} << static_cast<unsigned>(log2_count);
      std::vector<std::uint64_t> order(count);
      for (std::uint64_t i = 0; i < count; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      for (std::uint64_t idx : order) {
        std::vector<Elem> c(static_cast<std::size_t>(cls->free_len));
        for (auto& e : c) {
          e = static_cast<Elem>(idx & (F->size() - 1));
          idx >>= F->k();
        }
        const Poly h = cls->fixed + cls->base + cls->m * Poly(F, std::move(c));
        if (acceptable(h, D, spec)) return h;
      }
      continue;
    }
    for (std::uint64_t i = 0; i < budget; ++i) {
      const Poly r = spec.top_len == 0 ? Poly::random_of_degree(F, cls->free_len - 1, rng)
                                       : Poly::random_below(F, cls->free_len, rng);
      const Poly h = cls->fixed + cls->base + cls->m * r;
      if (acceptable(h, D, spec)) return h;
    }
  }
  throw MathError("internal error: irreducible search exhausted");
}

namespace {

bool common_at(const Poly& a1, const RatFunc& a2, const Poly& a3, const RatFunc& a4, const RatFunc& c,
               const Place& p) {
  return locally_represents(BinaryNormForm{RatFunc(a1), a2}, c, p) &&
         locally_represents(BinaryNormForm{RatFunc(a3), a4}, c, p);
}

}  // namespace

std::variant<CommonValue, AnisotropyCertificate> find_common_value(const Poly& a1, const RatFunc& a2, const Poly& a3,
                                                                   const RatFunc& a4, std::mt19937_64& rng,
                                                                   const CommonValueOptions& options) {
  if (a1.is_zero() || a3.is_zero()) throw MathError("a1 and a3 must be nonzero");
  const FieldPtr& F = a1.field();
  const RatFunc A1(a1), A3(a3);

  std::set<Place> S;
  for (const RatFunc* x : {&a2, &a4})
    if (!x->is_zero())
      for (const Place& p : finite_support(RatFunc(x->den()))) S.insert(p);
  for (const auto& fp : factor(a1 * a3)) S.insert(Place::finite_unchecked(fp.factor));

  std::vector<Poly> forced;
  std::vector<Congruence> congruences;
  for (const Place& p : S) {
    if (pole_at(a2, p) || pole_at(a4, p)) {
      auto cong = common_value_pole(A1, a2, A3, a4, p, rng);
      if (!cong) return make_certificate(p, a1, a2, a3, a4);
      const int e = multiplicity(cong->residue, p.poly());
      if (e > 1) throw MathError("internal error: congruence residue of valuation above one");
      if (e == 1) forced.push_back(p.poly());
      congruences.push_back(*cong);
    } else {
      auto nu = common_value_odd(A1, a2, A3, a4, p);
      if (!nu) return make_certificate(p, a1, a2, a3, a4);
      // Both parities work: keep v(c) even.
      if (*nu == 1) forced.push_back(p.poly());
    }
  }
  auto inf = common_value_inf(A1, a2, A3, a4, rng);
  if (!inf) return make_certificate(Place::infinite(), a1, a2, a3, a4);

  Poly Fp = Poly::constant(F, 1);
  for (const Poly& f : forced) Fp *= f;

  // c = Fp h: turn each congruence on c into one on h.
  IrreducibleSearchSpec spec;
  std::vector<std::pair<Poly, Poly>> pairs;
  for (const Congruence& cong : congruences) {
    const Poly& f = cong.place.poly();
    const int e = multiplicity(cong.residue, f);
    const Poly fe = f.pow(static_cast<unsigned>(e));
    const Poly mod = f.pow(static_cast<unsigned>(cong.N - e));
    const Poly target = ((cong.residue / fe) * (Fp / fe).invmod(mod)) % mod;
    pairs.emplace_back(target, mod);
  }
  spec.m = Poly::constant(F, 1);
  for (const auto& pr : pairs) spec.m *= pr.second;
  spec.a = pairs.empty() ? Poly::constant(F, 1) : crt(pairs);
  if (inf->N > 0) {
    const Poly tN = Poly::monomial(F, 1, inf->N);
    spec.top = (inf->residue * Fp.reverse(Fp.degree()).invmod(tN)) % tN;
    spec.top_len = inf->N;
  }
  if (inf->parity) spec.parity = (*inf->parity + static_cast<unsigned>(Fp.degree() % 2)) % 2;
  for (const Place& p : S) spec.avoid.push_back(p.poly());

  std::vector<Place> check_places(S.begin(), S.end());
  check_places.push_back(Place::infinite());
  // Exact local tests at S, infinity and every place dividing h.
  auto verified = [&](const Poly& h) {
    const RatFunc c(Fp * h);
    if (!std::all_of(check_places.begin(), check_places.end(),
                     [&](const Place& p) { return common_at(a1, a2, a3, a4, c, p); }))
      return false;
    if (h.degree() < 1) return true;
    for (const Place& p : finite_support(RatFunc(h)))
      if (!S.count(p) && !common_at(a1, a2, a3, a4, c, p)) return false;
    return true;
  };
  if (options.start_degree && options.direct_search_budget > 0) {
    const int lo = std::max(*options.start_degree, options.allow_constant_tail ? 0 : 1);
    const int hi = std::max(lo, spec.m.degree() + spec.top_len);
    std::int64_t left = options.direct_search_budget;
    for (int D = lo; D <= hi && left > 0; ++D) {
      const double log2_count = log2_q(F) * (D + 1);
      if (log2_count <= std::log2(static_cast<double>(left))) {
        const std::uint64_t count = std::uint64_t{1} << static_cast<unsigned>(log2_count);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          std::vector<Elem> c(static_cast<std::size_t>(D + 1));
          std::uint64_t x = idx;
          for (auto& e : c) {
            e = static_cast<Elem>(x & (F->size() - 1));
            x >>= F->k();
          }
          const Poly h(F, std::move(c));
          if (h.degree() != D) continue;
          --left;
          if (verified(h)) return CommonValue{forced, h, Fp * h};
        }
        continue;
      }
      const std::int64_t share = std::max<std::int64_t>(left / 2, 1);
      for (std::int64_t i = 0; i < share; ++i, --left) {
        const Poly h = Poly::random_of_degree(F, D, rng);
        if (verified(h)) return CommonValue{forced, h, Fp * h};
      }
    }
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Poly h = find_irreducible_in_class(spec, rng, options.start_degree);
    if (verified(h)) return CommonValue{forced, h, Fp * h};
  }
  throw MathError("internal error: common value failed local verification");
}

namespace {

/// x = A^2 + t B^2.
std::pair<RatFunc, RatFunc> p_basis(const RatFunc& x) {
  const FieldPtr& F = x.field();
  const Poly n = x.num() * x.den();
  std::vector<Elem> even, odd;
  for (int i = 0; i <= n.degree(); i += 2) {
    even.push_back(F->sqrt(n.coeff(i)));
    odd.push_back(F->sqrt(n.coeff(i + 1)));
  }
  const RatFunc d(x.den());
  return {RatFunc(Poly(F, even)) / d, RatFunc(Poly(F, odd)) / d};
}

/// Nonzero x with rows * x = 0, when one exists.
std::optional<std::vector<RatFunc>> kernel_vector(std::vector<std::vector<RatFunc>> rows, const FieldPtr& F) {
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const RatFunc inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const RatFunc f = rows[o][c];
      for (std::size_t j = 0; j < n; ++j) rows[o][j] += f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) != pivot_col.end()) continue;
    std::vector<RatFunc> x(n, RatFunc::zero(F));
    x[c] = RatFunc::one(F);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[static_cast<std::size_t>(pivot_col[i])] = rows[i][c];
    return x;
  }
  return std::nullopt;
}

QuaternaryResult isotropic(const QuaternaryForm& form, const Vec4& v) {
  if (is_zero(v) || !form.evaluate(v).is_zero()) throw MathError("internal error: zero failed verification");
  QuaternaryResult res{QuaternaryResult::Status::kIsotropic, v, {}, {}, {}, {}};
  return res;
}

QuaternaryResult solve_degenerate(const QuaternaryForm& form, const std::vector<Vec4>& radical, std::mt19937_64& rng,
                                  const QuaternaryOptions& options) {
  const FieldPtr& F = form.field();
  // Q is additive with Frobenius-semilinear scaling on the radical:
  // Q(sum x_i r_i) = (sum x_i A_i)^2 + t (sum x_i B_i)^2.
  std::vector<RatFunc> gamma;
  std::vector<std::vector<RatFunc>> rows(2);
  for (const Vec4& r : radical) {
    gamma.push_back(form.evaluate(r));
    if (gamma.back().is_zero()) return isotropic(form, r);
    auto [A, B] = p_basis(gamma.back());
    rows[0].push_back(A);
    rows[1].push_back(B);
  }
  if (auto x = kernel_vector(rows, F)) {
    Vec4 v = zero_vec(F);
    for (std::size_t i = 0; i < radical.size(); ++i) v = add(v, scale((*x)[i], radical[i]));
    return isotropic(form, v);
  }

  // Rank 2: a regular plane alpha x^2 + xy + beta y^2 plus <gamma_1, gamma_2>.
  QuaternaryResult res{QuaternaryResult::Status::kBudgetExhausted, {}, {}, {}, {}, {}};
  std::optional<std::pair<int, int>> pair;
  for (int i = 0; i < 4 && !pair; ++i)
    for (int j = i + 1; j < 4 && !pair; ++j)
      if (!form.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) pair = {i, j};
  if (!pair || radical.size() != 2) throw MathError("internal error: unexpected radical dimension");
  const Vec4 v1 = unit_vec(F, pair->first);
  const Vec4 v2 = scale(form.gram[static_cast<std::size_t>(pair->first)][static_cast<std::size_t>(pair->second)].inverse(),
                        unit_vec(F, pair->second));
  const RatFunc alpha = form.evaluate(v1), beta = form.evaluate(v2);
  if (alpha.is_zero()) return isotropic(form, v1);
  if (beta.is_zero()) return isotropic(form, v2);
  const RatFunc b = alpha * beta;
  if (auto z = wp_solve_rational(b)) return isotropic(form, add(scale(*z, v1), scale(alpha, v2)));

  // alpha N_b(X, Y) = gamma_1 u^2 + gamma_2 w^2 for small u, w, then
  // v = X v1 + alpha Y v2 + u r1 + w r2.
  const BinaryNormForm bf{alpha, b};
  std::vector<Place> base = finite_support(RatFunc(b.den()));
  base.push_back(Place::infinite());
  const int len = F->k() <= 2 ? 3 : 2;
  const std::uint64_t count = std::uint64_t{1} << (F->k() * static_cast<unsigned>(len));
  auto poly_at = [&](std::uint64_t idx) {
    std::vector<Elem> c(static_cast<std::size_t>(len));
    for (auto& e : c) {
      e = static_cast<Elem>(idx & (F->size() - 1));
      idx >>= F->k();
    }
    return Poly(F, std::move(c));
  };
  for (std::uint64_t iu = 0; iu < count; ++iu) {
    for (std::uint64_t iw = 0; iw < count; ++iw) {
      const RatFunc u(poly_at(iu)), w(poly_at(iw));
      const RatFunc delta = gamma[0] * u.square() + gamma[1] * w.square();
      if (delta.is_zero()) continue;
      std::vector<Place> places = base;
      for (const Place& p : finite_support(delta / alpha)) places.push_back(p);
      if (!std::all_of(places.begin(), places.end(),
                       [&](const Place& p) { return locally_represents(bf, delta, p); }))
        continue;
      try {
        const BinarySolution s = solve_binary(NormEquation{bf, delta}, rng, options.binary);
        return isotropic(form, add(add(scale(s.x, v1), scale(alpha * s.y, v2)),
                                   add(scale(u, radical[0]), scale(w, radical[1]))));
      } catch (const BudgetExhausted&) {
      }
    }
  }
  res.note = "degenerate form: no zero found in the bounded radical search";
  return res;
}

}  // namespace

QuaternaryResult solve_quaternary(const QuaternaryForm& form, std::mt19937_64& rng, const QuaternaryOptions& options) {
  const FieldPtr& F = form.field();
  std::variant<CanonicalForm, EarlyZero> canon;
  try {
    canon = canonicalize(form);
  } catch (const DegenerateForm& e) {
    return solve_degenerate(form, e.radical(), rng, options);
  }
  if (auto* ez = std::get_if<EarlyZero>(&canon)) return isotropic(form, ez->vector);
  const CanonicalForm& cf = std::get<CanonicalForm>(canon);
  const NormalizedForm nf = normalize_coefficients(cf.a1, cf.a2, cf.a3, cf.a4);
  const Mat4 T = cf.transform.compose(nf.transform);
  auto pull = [&](const Vec4& v) {
    QuaternaryResult res = isotropic(form, T.apply(v));
    res.normalized = nf;
    return res;
  };
  const RatFunc one = RatFunc::one(F), zero = RatFunc::zero(F);
  if (auto z = wp_solve_rational(nf.a2)) return pull({*z, one, zero, zero});
  if (auto z = wp_solve_rational(nf.a4)) return pull({zero, zero, *z, one});
  if (nf.a1 == nf.a3 && nf.a2 == nf.a4) return pull({one, zero, one, zero});

  QuaternaryResult res{QuaternaryResult::Status::kBudgetExhausted, {}, {}, nf, {}, {}};
  CommonValueOptions copts = options.common;
  for (int attempt = 0; attempt < options.max_common_values; ++attempt) {
    auto cv = find_common_value(nf.a1, nf.a2, nf.a3, nf.a4, rng, copts);
    if (auto* cert = std::get_if<AnisotropyCertificate>(&cv)) {
      res.status = QuaternaryResult::Status::kAnisotropic;
      res.certificate = *cert;
      return res;
    }
    const CommonValue& c = std::get<CommonValue>(cv);
    res.common_value = c;
    try {
      const BinarySolution s1 = solve_binary(NormEquation{{RatFunc(nf.a1), nf.a2}, RatFunc(c.value)}, rng, options.binary);
      const BinarySolution s2 = solve_binary(NormEquation{{RatFunc(nf.a3), nf.a4}, RatFunc(c.value)}, rng, options.binary);
      QuaternaryResult out = pull({s1.x, s1.y, s2.x, s2.y});
      out.common_value = c;
      return out;
    } catch (const BudgetExhausted&) {
      // Another common value, away from the constant tails.
      copts.allow_constant_tail = false;
      copts.start_degree = copts.start_degree.value_or(0) + 1;
    }
  }
  res.note = "binary norm search exhausted its budget for every common value tried";
  return res;
}

}  // namespace qf2
