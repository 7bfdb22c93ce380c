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

#ifndef QF2_BINARY_NORM_HPP
#define QF2_BINARY_NORM_HPP

#include <optional>
#include <random>
#include <stdexcept>

#include "qf2/artin_schreier.hpp"

namespace qf2 {

/// scale * (x^2 + x*y + param * y^2) = target.
struct NormEquation {
  BinaryNormForm form;
  RatFunc target;
  bool satisfied_by(const RatFunc& x, const RatFunc& y) const { return form.evaluate(x, y) == target; }
};

struct BinarySolution {
  RatFunc x, y;
};

/// The randomized search ran out of degree budget. Not a proof of absence.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("no solution found within degree budget") {}
};

struct BinarySolveOptions {
  /// Starting bound on deg Y and on the slack in deg D.
  int initial_degree = 2;
  /// The search gives up once the height bound would pass this.
  int max_degree = 32;
  /// Trials before the first bound increase; each later step takes sqrt(2)
  /// times as many.
  int samples_per_degree = 2048;
  unsigned threads = 1;
};

/// Finds (x, y) with scale * (x^2 + xy + param y^2) = target. Numerators Y
/// are drawn at random under a slowly growing bound; for each, x = X / D and
/// y = Y / D with (X, D) from a linear system over GF(2). Throws
/// BudgetExhausted.
BinarySolution solve_binary(const NormEquation& eq, std::mt19937_64& rng, const BinarySolveOptions& options = {});

/// Exhaustive scan of x = X / L, y = Y / L with deg X, deg Y <= d for the
/// fixed denominator L built from the poles of param and target. Throws
/// when the scan would exceed 2^24 pairs.
std::optional<BinarySolution> brute_force_binary(const NormEquation& eq, int d);

}  // namespace qf2

#endif  // QF2_BINARY_NORM_HPP
