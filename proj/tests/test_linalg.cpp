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
#include "qham/corpus.hpp"
#include "qham/errors.hpp"
#include "qham/linalg.hpp"
#include "qham/rng.hpp"

using qham::Rng;
using qham::linalg::HermitianMatrix;
using qham::linalg::Matrix;
using qham::linalg::ProjectionMatrix;

namespace {

Matrix diag3(double a, double b, double c) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("normalized trace divides by the dimension") {
  CHECK(qham::linalg::normalized_trace(HermitianMatrix(diag3(1, 1, 0))) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("trace norm is the normalized absolute eigenvalue sum") {
  CHECK(qham::linalg::trace_norm(HermitianMatrix(diag3(0.6, -0.2, 0))) ==
        doctest::Approx(0.8 / 3.0).epsilon(1e-12));
}

TEST_CASE("min eigenvalue of a diagonal matrix") {
  CHECK(qham::linalg::min_eigenvalue(HermitianMatrix(diag3(0.3, -0.2, 1))) ==
        doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("hermitian wrapper rejects asymmetric input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianMatrix{m}, qham::NotHermitian);
}

TEST_CASE("projection wrapper rejects a non-idempotent matrix") {
  CHECK_THROWS_AS(ProjectionMatrix{Matrix(diag3(0.5, 0, 0))}, qham::NotProjection);
}

TEST_CASE("meet and join of a half-overlapping pair") {
  const ProjectionMatrix p{diag3(1, 1, 0)};
  Matrix qm = Matrix::Zero(3, 3);
  qm(0, 0) = 1.0;
  // second range direction: (e2 + e3)/sqrt(2)
  qm(1, 1) = 0.5;
  qm(1, 2) = 0.5;
  qm(2, 1) = 0.5;
  qm(2, 2) = 0.5;
  const ProjectionMatrix q{qm};

  const auto met = qham::linalg::meet(p, q);
  CHECK(qham::linalg::max_abs(met.mat() - diag3(1, 0, 0)) < 1e-10);

  const auto join = qham::linalg::join(p, q);
  CHECK(qham::linalg::max_abs(join.mat() - Matrix::Identity(3, 3)) < 1e-10);

  // trace identity on the same pair
  const double lhs = qham::linalg::normalized_trace(join.hermitian()) +
                     qham::linalg::normalized_trace(met.hermitian());
  const double rhs = qham::linalg::normalized_trace(p.hermitian()) +
                     qham::linalg::normalized_trace(q.hermitian());
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("meet of orthogonal lines is zero") {
  const ProjectionMatrix p{diag3(1, 0, 0)};
  const ProjectionMatrix q{diag3(0, 1, 0)};
  CHECK(qham::linalg::max_abs(qham::linalg::meet(p, q).mat()) < 1e-12);
}

TEST_CASE("principal angle cosine of tilted lines") {
  Matrix pm = Matrix::Zero(2, 2);
  pm(0, 0) = 1.0;
  Matrix qm = Matrix::Constant(2, 2, 0.5);
  const auto cosines = qham::linalg::principal_angle_cosines(ProjectionMatrix{pm},
                                                             ProjectionMatrix{qm});
  REQUIRE(cosines.size() == 1);
  CHECK(cosines[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("iterated product converges to the meet") {
  Rng rng(31);
  const auto p = qham::corpus::random_projection(rng, 5, 3);
  const auto q = qham::corpus::random_projection(rng, 5, 3);
  const Matrix iterate = qham::linalg::meet_iterate(p, q, 24);
  CHECK(qham::linalg::max_abs(qham::linalg::meet(p, q).mat() - iterate) < 1e-4);
}

TEST_CASE("kron stacks diagonals in row-major order") {
  Matrix d2 = Matrix::Zero(2, 2);
  d2(0, 0) = 1.0;
  const Matrix k = qham::linalg::kron(d2, d2);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  CHECK(qham::linalg::max_abs(k - expected) == 0.0);
}

TEST_CASE("kron refuses products beyond the cap") {
  const Matrix a = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(qham::linalg::kron(a, a, 8), qham::DimensionOverflow);
}

TEST_CASE("range basis splits spectrum at one half") {
  const ProjectionMatrix p{diag3(1, 1, 0)};
  CHECK(qham::linalg::range_basis(p).cols() == 2);
}
