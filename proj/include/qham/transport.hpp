// Copyright 2026 The qham Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHAM_TRANSPORT_HPP
#define QHAM_TRANSPORT_HPP

#include <vector>

#include "qham/linalg.hpp"

namespace qham::transport {

struct OtResult {
  linalg::RealMatrix plan;  // m×k, entries ≥ 0, marginals mu/nu
  double cost = 0.0;
  linalg::RealVector row_potential;
  linalg::RealVector col_potential;
};

// Exact transportation LP: min ⟨plan, cost⟩ over nonnegative plans with
// marginals mu and nu. Transportation simplex, north-west-corner start,
// Bland's anti-cycling pivot rule with lexicographic tie-breaking.
// Optimality is certified against the dual potentials before returning.
// Both marginals must sum to 1 within tol::kWeightSum; they are renormalized
// once at entry.
OtResult solve_ot(const std::vector<double>& mu, const std::vector<double>& nu,
                  const linalg::RealMatrix& cost);

// Independent oracle: enumerates every spanning tree of the complete
// bipartite support graph (the basic solutions of the transportation
// polytope) and takes the cheapest feasible one. m, k ≤ 4.
double brute_force_ot(const std::vector<double>& mu, const std::vector<double>& nu,
                      const linalg::RealMatrix& cost);

// (1/n)·|{i : sigma(i) ≠ sigma2(i)}| — the normalized mismatch count.
double hamming(const std::vector<int>& sigma, const std::vector<int>& sigma2);

struct ClassicalMeasure {
  std::vector<std::vector<int>> perms;  // 0-based image lists, common n
  std::vector<double> weights;
};

// Wasserstein-1 between two finitely supported measures on permutations,
// with the normalized mismatch count as ground cost.
double classical_w1(const ClassicalMeasure& m1, const ClassicalMeasure& m2);

}  // namespace qham::transport

#endif  // QHAM_TRANSPORT_HPP
