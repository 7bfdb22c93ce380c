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

#include "qf2/binary_norm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <thread>

namespace qf2 {

namespace {

/// x = w^2 * r with r monic square-free; returns {w, r}.
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

Poly poly_from_index(const FieldPtr& F, std::uint64_t index, int len) {
  std::vector<Elem> c(static_cast<std::size_t>(len));
  for (auto& e : c) {
    e = static_cast<Elem>(index & (F->size() - 1));
    index >>= F->k();
  }
  return Poly(F, std::move(c));
}

/// (X, D) with D != 0, deg X <= dx, deg D <= dd and
/// B X^2 + BY X + R D^2 = T. The left side is F_2-linear in (X, D) since
/// squaring is additive, so this is Gaussian elimination over F_2.
std::optional<std::pair<Poly, Poly>> solve_xd(const Poly& B, const Poly& BY, const Poly& R, const Poly& T, int dx,
                                              int dd) {
  const FieldPtr& F = B.field();
  const int k = static_cast<int>(F->k());
  const int nx = (dx + 1) * k, ncols = nx + (dd + 1) * k;
  std::vector<Poly> images(static_cast<std::size_t>(ncols));
  int top = T.degree();
  for (int c = 0; c < ncols; ++c) {
    const Elem beta = Elem{1} << (c % k);
    Poly img;
    if (c < nx) {
      const Poly X = Poly::monomial(F, beta, c / k);
      img = B * X.square() + BY * X;
    } else {
      const Poly D = Poly::monomial(F, beta, (c - nx) / k);
      img = R * D.square();
    }
    top = std::max(top, img.degree());
    images[static_cast<std::size_t>(c)] = std::move(img);
  }
  if (top < 0) top = 0;
  const std::size_t nrows = static_cast<std::size_t>((top + 1) * k);
  const std::size_t words = (static_cast<std::size_t>(ncols) + 1 + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(nrows, std::vector<std::uint64_t>(words, 0));
  auto set_column = [&](const Poly& p, int c) {
    for (int e = 0; e <= p.degree(); ++e) {
      const Elem v = p.coeff(e);
      for (int j = 0; j < k; ++j)
        if ((v >> j) & 1) rows[static_cast<std::size_t>(e * k + j)][static_cast<std::size_t>(c) / 64] ^= std::uint64_t{1} << (c % 64);
    }
  };
  for (int c = 0; c < ncols; ++c) set_column(images[static_cast<std::size_t>(c)], c);
  set_column(T, ncols);
  auto bit = [](const std::vector<std::uint64_t>& row, int c) { return (row[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1; };

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && !bit(rows[p], c)) ++p;
    if (p == nrows) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t o = 0; o < nrows; ++o)
      if (o != r && bit(rows[o], c))
        for (std::size_t w = 0; w < words; ++w) rows[o][w] ^= rows[r][w];
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t o = r; o < nrows; ++o)
    if (bit(rows[o], ncols)) return std::nullopt;

  std::vector<std::uint8_t> sol(static_cast<std::size_t>(ncols), 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[static_cast<std::size_t>(pivot_col[i])] = static_cast<std::uint8_t>(bit(rows[i], ncols));
  auto d_nonzero = [&](const std::vector<std::uint8_t>& v) {
    return std::any_of(v.begin() + nx, v.end(), [](std::uint8_t b) { return b != 0; });
  };
  if (!d_nonzero(sol)) {
    // Add a kernel vector that moves D.
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    bool fixed = false;
    for (int f = 0; f < ncols && !fixed; ++f) {
      if (is_pivot[static_cast<std::size_t>(f)]) continue;
      std::vector<std::uint8_t> kv(static_cast<std::size_t>(ncols), 0);
      kv[static_cast<std::size_t>(f)] = 1;
      for (std::size_t i = 0; i < pivot_col.size(); ++i) kv[static_cast<std::size_t>(pivot_col[i])] = static_cast<std::uint8_t>(bit(rows[i], f));
      if (!d_nonzero(kv)) continue;
      for (int c = 0; c < ncols; ++c) sol[static_cast<std::size_t>(c)] ^= kv[static_cast<std::size_t>(c)];
      fixed = true;
    }
    if (!fixed) return std::nullopt;
  }
  std::vector<Elem> xc(static_cast<std::size_t>(dx + 1), 0), dc(static_cast<std::size_t>(dd + 1), 0);
  for (int c = 0; c < ncols; ++c) {
    if (!sol[static_cast<std::size_t>(c)]) continue;
    const Elem beta = Elem{1} << (c % k);
    if (c < nx) xc[static_cast<std::size_t>(c / k)] ^= beta;
    else dc[static_cast<std::size_t>((c - nx) / k)] ^= beta;
  }
  return std::make_pair(Poly(F, std::move(xc)), Poly(F, std::move(dc)));
}

}  // namespace

BinarySolution solve_binary(const NormEquation& eq, std::mt19937_64& rng, const BinarySolveOptions& options) {
  const FieldPtr& F = eq.form.param.field() ? eq.form.param.field() : eq.target.field();
  if (eq.form.scale.is_zero()) throw MathError("form scale must be nonzero");
  if (eq.target.is_zero()) return {RatFunc::zero(F), RatFunc::zero(F)};

  // N_in(x, y) = N_out(x + h y, y).
  const MinimizeResult m = minimize(BinaryNormForm{RatFunc::one(F), eq.form.param});
  const RatFunc& a = m.form.param;
  const RatFunc& h = m.shift.h;

  // target / scale = (w / den)^2 * r with r square-free.
  const RatFunc C = eq.target / eq.form.scale;
  auto [w, r] = split_square(C.num() * C.den());
  const RatFunc s = RatFunc(w) / RatFunc(C.den());

  auto finish = [&](const RatFunc& X, const RatFunc& Y) {
    const RatFunc y = Y * s;
    const RatFunc x = X * s + h * y;
    if (!eq.satisfied_by(x, y)) throw MathError("internal error: binary solution failed verification");
    return BinarySolution{x, y};
  };
  if (r.is_one()) return finish(RatFunc::one(F), RatFunc::zero(F));

  // At a pole of a of (odd) order m with e = v_f(r), comparing valuations of
  // x^2, xy and a y^2 forces v_f(y) >= ceil((e + m) / 2). At infinity the
  // same bound caps deg y.
  Poly Ymul = Poly::constant(F, 1);
  for (const auto& fp : factor(a.den())) {
    const int e = multiplicity(r, fp.factor);
    Ymul *= fp.factor.pow(static_cast<unsigned>((e + fp.exponent + 1) / 2));
  }
  std::optional<int> excess;  // deg Y - deg D <= excess
  if (!a.is_zero() && a.degree() > 0) {
    const int n = a.degree() - r.degree();
    excess = -(n >= 0 ? (n + 1) / 2 : -((-n) / 2));
  }

  // For fixed Y, B X^2 + B Y X + r B D^2 = A Y^2 is linear in (X, D); then
  // x = X / D, y = Y / D.
  const Poly& A = a.num();
  const Poly& B = a.den();
  const Poly R = r * B;
  const int half_r = (r.degree() + 1) / 2;
  auto trial = [&](const Poly& Y, int dd) -> std::optional<std::pair<RatFunc, RatFunc>> {
    const int dY = Y.degree();
    int dx = std::max(dd + half_r, dY);
    if (!A.is_zero()) dx = std::max(dx, (A.degree() + 2 * dY - B.degree() + 1) / 2);
    auto xd = solve_xd(B, B * Y, R, A * Y.square(), std::max(dx, 0), dd);
    if (!xd) return std::nullopt;
    return std::make_pair(RatFunc(xd->first, xd->second), RatFunc(Y, xd->second));
  };

  // Smallest-index hit in a batch of trials, optionally over threads.
  using Trial = std::pair<Poly, int>;
  auto search_batch = [&](const std::vector<Trial>& batch) -> std::optional<std::pair<RatFunc, RatFunc>> {
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      for (const auto& [Y, dd] : batch)
        if (auto hit = trial(Y, dd)) return hit;
      return std::nullopt;
    }
    std::atomic<std::size_t> best{batch.size()};
    std::vector<std::optional<std::pair<RatFunc, RatFunc>>> found(batch.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < batch.size() && i < best.load(); i += threads) {
          if (auto hit = trial(batch[i].first, batch[i].second)) {
            found[i] = hit;
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    const std::size_t i = best.load();
    if (i == batch.size()) return std::nullopt;
    return found[i];
  };

  // Random numerators Y = Ymul * Y' with deg Y' and the slack in deg D drawn
  // up to a bound. The bound starts at initial_degree and grows by one after
  // samples * 2^(steps / 2) trials, up to max_degree.
  const int top = std::max(options.max_degree, 0);
  int bound = std::clamp(options.initial_degree, 0, top);
  const double per_step = std::max(options.samples_per_degree, 1);
  double used = 0, step_end = per_step;
  constexpr std::size_t kBatch = 64;
  for (;;) {
    while (used >= step_end) {
      if (bound >= top) throw BudgetExhausted();
      ++bound;
      step_end = used + per_step * std::pow(2.0, (bound - options.initial_degree) / 2.0);
    }
    std::vector<Trial> batch;
    while (batch.size() < kBatch && used < step_end) {
      used += 1;
      const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(bound + 1));
      const Poly Y = Ymul * Poly::random_of_degree(F, m, rng);
      const int lo = excess ? std::max(0, Y.degree() - *excess) : 0;
      const int dd = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(bound + 1));
      batch.emplace_back(Y, dd);
    }
    if (auto hit = search_batch(batch)) return finish(hit->first, hit->second);
  }
}

std::optional<BinarySolution> brute_force_binary(const NormEquation& eq, int d) {
  const FieldPtr& F = eq.form.param.field() ? eq.form.param.field() : eq.target.field();
  if (d < 0) throw MathError("degree bound must be nonnegative");
  const double log2_pairs = 2.0 * F->k() * (d + 1);
  if (log2_pairs > 24) throw MathError("brute force scan exceeds 2^24 pairs");
  if (eq.target.is_zero()) return BinarySolution{RatFunc::zero(F), RatFunc::zero(F)};

  // Fixed denominator: half the pole orders of target/scale and param.
  Poly L = Poly::constant(F, 1);
  const RatFunc C = eq.target / eq.form.scale;
  for (const Poly* den : {&C.den(), &eq.form.param.den()})
    for (const auto& fp : factor(*den)) L *= fp.factor.pow(static_cast<unsigned>((fp.exponent + 1) / 2));
  // p X^2 + p X Y + alpha Y^2 = tau over a common denominator.
  const RatFunc P = eq.form.scale, A = eq.form.scale * eq.form.param, T = eq.target * RatFunc(L.square());
  const Poly M = P.den() * A.den() * T.den();
  const Poly p = P.num() * (M / P.den()), alpha = A.num() * (M / A.den()), tau = T.num() * (M / T.den());

  const int len = d + 1;
  const std::uint64_t count = std::uint64_t{1} << (F->k() * static_cast<unsigned>(len));
  for (std::uint64_t iy = 0; iy < count; ++iy) {
    const Poly Y = poly_from_index(F, iy, len);
    const Poly aY2 = alpha * Y.square() + tau;
    for (std::uint64_t ix = 0; ix < count; ++ix) {
      if (ix == 0 && iy == 0) continue;
      const Poly X = poly_from_index(F, ix, len);
      if ((p * (X.square() + X * Y) + aY2).is_zero()) {
        const RatFunc x = RatFunc(X, L), y = RatFunc(Y, L);
        if (!eq.satisfied_by(x, y)) throw MathError("internal error: brute force check mismatch");
        return BinarySolution{x, y};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qf2
