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

#include <cmath>

#include "doctest.h"
#include "qham/errors.hpp"
#include "qham/rng.hpp"
#include "qham/transport.hpp"

using qham::Rng;
using qham::linalg::RealMatrix;
using qham::transport::ClassicalMeasure;

TEST_CASE("single row instance splits mass by the column marginal") {
  RealMatrix cost(1, 2);
  cost(0, 0) = 0.0;
  cost(0, 1) = 2.0 / 3.0;
  const auto result = qham::transport::solve_ot({1.0}, {0.5, 0.5}, cost);
  CHECK(result.cost == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(result.plan(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(result.plan(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("matched diagonal weights ride the zero-cost cells") {
  RealMatrix cost(2, 2);
  cost(0, 0) = 0.0;
  cost(0, 1) = 1.0;
  cost(1, 0) = 1.0;
  cost(1, 1) = 0.0;
  CHECK(qham::transport::solve_ot({0.5, 0.5}, {0.5, 0.5}, cost).cost == 0.0);
  CHECK(qham::transport::brute_force_ot({0.5, 0.5}, {0.5, 0.5}, cost) == 0.0);
}

TEST_CASE("unbalanced diagonal weights pay for the overflow") {
  RealMatrix cost(2, 2);
  cost(0, 0) = 0.0;
  cost(0, 1) = 1.0;
  cost(1, 0) = 1.0;
  cost(1, 1) = 0.0;
  const auto result = qham::transport::solve_ot({0.7, 0.3}, {0.3, 0.7}, cost);
  CHECK(result.cost == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(qham::transport::brute_force_ot({0.7, 0.3}, {0.3, 0.7}, cost) ==
        doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("duals certify the reported cost") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const int m = rng.uniform_int(1, 4);
    const int k = rng.uniform_int(1, 4);
    std::vector<double> mu(m), nu(k);
    double su = 0.0, sv = 0.0;
    for (auto& x : mu) su += (x = rng.uniform(0.1, 1.0));
    for (auto& x : nu) sv += (x = rng.uniform(0.1, 1.0));
    for (auto& x : mu) x /= su;
    for (auto& x : nu) x /= sv;
    RealMatrix cost(m, k);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) cost(i, j) = rng.uniform();
    }
    const auto result = qham::transport::solve_ot(mu, nu, cost);
    double dual = 0.0;
    for (int i = 0; i < m; ++i) dual += mu[i] * result.row_potential[i];
    for (int j = 0; j < k; ++j) dual += nu[j] * result.col_potential[j];
    CHECK(std::abs(dual - result.cost) < 1e-9);
  }
}

TEST_CASE("solver and enumeration agree with zero weights present") {
  RealMatrix cost(3, 2);
  cost << 0.2, 0.9, 0.0, 0.4, 0.7, 0.1;
  const std::vector<double> mu = {0.5, 0.0, 0.5};
  const std::vector<double> nu = {0.25, 0.75};
  CHECK(qham::transport::solve_ot(mu, nu, cost).cost ==
        doctest::Approx(qham::transport::brute_force_ot(mu, nu, cost)).epsilon(1e-12));
}

TEST_CASE("marginal validation") {
  RealMatrix cost(1, 1);
  cost(0, 0) = 0.0;
  CHECK_THROWS_AS(qham::transport::solve_ot({0.5}, {1.0}, cost),
                  qham::InfeasibleMarginals);
  CHECK_THROWS_AS(qham::transport::solve_ot({-1.0, 2.0}, {1.0},
                                            RealMatrix(RealMatrix::Zero(2, 1))),
                  qham::InfeasibleMarginals);
  CHECK_THROWS_AS(qham::transport::solve_ot({1.0}, {1.0}, RealMatrix(RealMatrix::Zero(2, 2))),
                  qham::SizeMismatch);
}

TEST_CASE("enumeration refuses large instances") {
  const std::vector<double> five(5, 0.2);
  CHECK_THROWS_AS(qham::transport::brute_force_ot(five, {1.0},
                                                  RealMatrix(RealMatrix::Zero(5, 1))),
                  qham::TooLarge);
}

TEST_CASE("hamming distance on permutations") {
  CHECK(qham::transport::hamming({0, 1, 2}, {1, 0, 2}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(qham::transport::hamming({1, 2, 0}, {0, 1, 2}) == 1.0);
  CHECK(qham::transport::hamming({0, 1}, {0, 1}) == 0.0);
  CHECK_THROWS_AS(qham::transport::hamming({0, 1}, {0, 1, 2}), qham::SizeMismatch);
}

TEST_CASE("classical wasserstein hand value") {
  ClassicalMeasure m1;
  m1.perms = {{0, 1, 2}};
  m1.weights = {1.0};
  ClassicalMeasure m2;
  m2.perms = {{0, 1, 2}, {1, 0, 2}};
  m2.weights = {0.5, 0.5};
  CHECK(qham::transport::classical_w1(m1, m2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}
