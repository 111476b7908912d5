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

#include "doctest.h"
#include "qham/corpus.hpp"
#include "qham/errors.hpp"
#include "qham/magic.hpp"
#include "qham/rng.hpp"

using qham::Rng;
using qham::linalg::Matrix;
using qham::linalg::ProjectionMatrix;
using qham::magic::MagicUnitary;

namespace {

ProjectionMatrix half_projection() {
  return ProjectionMatrix{Matrix(Matrix::Constant(2, 2, 0.5))};
}

}  // namespace

TEST_CASE("permutation grid puts ones at sigma images") {
  const auto m = qham::magic::from_permutation(3, {1, 0, 2});
  CHECK(m.d() == 1);
  CHECK(m.cell(0, 1).mat()(0, 0).real() == 1.0);
  CHECK(m.cell(0, 0).mat()(0, 0).real() == 0.0);
  CHECK(m.cell(1, 0).mat()(0, 0).real() == 1.0);
  CHECK(m.cell(2, 2).mat()(0, 0).real() == 1.0);
  CHECK(qham::magic::validate(m).pass);
}

TEST_CASE("permutation with a repeated image is rejected") {
  CHECK_THROWS_AS(qham::magic::from_permutation(3, {0, 0, 2}), qham::InvalidPermutation);
}

TEST_CASE("two block grid validates and has half traces") {
  Rng rng(7);
  const auto m = qham::magic::two_block(qham::corpus::random_projection(rng, 2, 1),
                                        qham::corpus::random_projection(rng, 2, 1));
  CHECK(m.n() == 4);
  CHECK(m.d() == 2);
  CHECK(qham::magic::validate(m).pass);
  // every in-block cell is rank one in dimension two
  CHECK(m.cell(0, 0).mat().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qham::linalg::max_abs(m.cell(0, 2).mat()) == 0.0);
}

TEST_CASE("two block needs equal dimensions") {
  Rng rng(7);
  CHECK_THROWS_AS(qham::magic::two_block(qham::corpus::random_projection(rng, 2, 1),
                                         qham::corpus::random_projection(rng, 3, 1)),
                  qham::DimensionMismatch);
}

TEST_CASE("conjugation preserves validity and needs a unitary") {
  Rng rng(11);
  const auto m = qham::magic::two_block(half_projection(), half_projection());
  const auto u = qham::corpus::haar_unitary(rng, 2);
  CHECK(qham::magic::validate(qham::magic::conjugate(m, u)).pass);
  CHECK_THROWS_AS(qham::magic::conjugate(m, Matrix(Matrix::Constant(2, 2, 0.5))),
                  qham::NotUnitary);
}

TEST_CASE("direct sum doubles the fiber dimension") {
  const auto sum = qham::magic::direct_sum(qham::magic::from_permutation(2, {0, 1}),
                                           qham::magic::from_permutation(2, {1, 0}));
  CHECK(sum.n() == 2);
  CHECK(sum.d() == 2);
  CHECK(qham::magic::validate(sum).pass);
  // each cell mixes a fixed point with a moved point
  CHECK(sum.cell(0, 0).mat().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sum.cell(0, 1).mat().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("direct sum needs matching n") {
  CHECK_THROWS_AS(qham::magic::direct_sum(qham::magic::from_permutation(2, {0, 1}),
                                          qham::magic::from_permutation(3, {0, 1, 2})),
                  qham::SizeMismatch);
}

TEST_CASE("convolution of classical grids composes the permutations") {
  const std::vector<int> sigma = {1, 2, 0};
  const std::vector<int> sigma2 = {1, 0, 2};
  const auto conv = qham::magic::convolve(qham::magic::from_permutation(3, sigma),
                                          qham::magic::from_permutation(3, sigma2));
  std::vector<int> composed(3);
  for (int i = 0; i < 3; ++i) composed[i] = sigma2[sigma[i]];
  CHECK(conv.same_grid(qham::magic::from_permutation(3, composed), 0.0));
}

TEST_CASE("convolution with the identity grid preserves cells") {
  const auto id = qham::magic::from_permutation(4, {0, 1, 2, 3});
  const auto m = qham::magic::two_block(half_projection(), half_projection());
  const auto conv = qham::magic::convolve(id, m);
  CHECK(conv.d() == m.d());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(qham::linalg::max_abs(conv.cell(i, j).mat() - m.cell(i, j).mat()) < 1e-14);
    }
  }
}

TEST_CASE("convolution respects the dimension cap") {
  const auto m = qham::magic::two_block(half_projection(), half_projection());
  CHECK_THROWS_AS(qham::magic::convolve(m, m, 2), qham::DimensionOverflow);
}

TEST_CASE("validation flags a broken row sum") {
  // a grid of valid projections whose first row sums to 2·I
  std::vector<Matrix> cells;
  const Matrix one = Matrix::Identity(1, 1);
  const Matrix zero = Matrix::Zero(1, 1);
  const std::vector<std::vector<int>> rows = {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  for (const auto& row : rows) {
    for (int v : row) cells.push_back(v == 1 ? one : zero);
  }
  const auto report = qham::magic::validate_cells(3, 1, cells);
  CHECK_FALSE(report.pass);
  CHECK(report.worst_row_sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("grid constructor rejects mismatched cell dimensions") {
  std::vector<ProjectionMatrix> cells;
  for (int k = 0; k < 3; ++k) cells.emplace_back(Matrix(Matrix::Identity(1, 1)));
  cells.emplace_back(Matrix(Matrix::Identity(2, 2)));
  CHECK_THROWS_AS(MagicUnitary(2, 1, cells), qham::DimensionMismatch);
}

TEST_CASE("random corpus representations validate") {
  Rng rng(99);
  for (int n : {2, 3, 4, 5}) {
    for (int t = 0; t < 5; ++t) {
      CHECK(qham::magic::validate(qham::corpus::random_representation(rng, n)).pass);
    }
  }
}
