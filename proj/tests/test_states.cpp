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
#include "qham/rng.hpp"
#include "qham/states.hpp"

using qham::Rng;
using qham::linalg::Matrix;
using qham::magic::MagicUnitary;
using qham::states::AtomicTrace;
using qham::states::StateMixture;
using qham::states::WeightedAtom;

namespace {

MagicUnitary half_two_block() {
  const qham::linalg::ProjectionMatrix half{Matrix(Matrix::Constant(2, 2, 0.5))};
  return qham::magic::two_block(half, half);
}

}  // namespace

TEST_CASE("atomic trace of a two block grid is half on the blocks") {
  const AtomicTrace atom(half_two_block());
  CHECK(atom.omega(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(atom.omega(0, 2) == 0.0);
  // bistochastic rows and columns
  for (int i = 0; i < 4; ++i) {
    CHECK(atom.omega.row(i).sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(atom.omega.col(i).sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("normalize rescales weights and rejects all-zero input") {
  const AtomicTrace atom(qham::magic::from_permutation(3, {0, 1, 2}));
  const AtomicTrace atom2(qham::magic::from_permutation(3, {1, 0, 2}));
  const StateMixture raw{{{1.0, atom}, {3.0, atom2}}};
  const auto normalized = qham::states::normalize(raw);
  CHECK(normalized.at(0).weight == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(normalized.at(1).weight == doctest::Approx(0.75).epsilon(1e-14));
  CHECK_THROWS_AS(qham::states::normalize(StateMixture{{{0.0, atom}}}),
                  qham::AllZeroWeights);
}

TEST_CASE("mixture rejects negative weights and mismatched n") {
  const AtomicTrace a3(qham::magic::from_permutation(3, {0, 1, 2}));
  const AtomicTrace a2(qham::magic::from_permutation(2, {0, 1}));
  CHECK_THROWS_AS((StateMixture{{{-0.5, a3}}}), qham::AllZeroWeights);
  CHECK_THROWS_AS((StateMixture{{{0.5, a3}, {0.5, a2}}}), qham::SizeMismatch);
}

TEST_CASE("dedupe merges atoms with identical grids") {
  const AtomicTrace atom(qham::magic::from_permutation(3, {1, 0, 2}));
  const StateMixture doubled{{{0.5, atom}, {0.5, atom}}};
  const auto merged = qham::states::dedupe(doubled);
  CHECK(merged.size() == 1);
  CHECK(merged.at(0).weight == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("empty word evaluates to one") {
  const auto phi = qham::states::delta_permutation(3, {1, 2, 0});
  CHECK(qham::states::evaluate_word(phi, {}) == 1.0);
}

TEST_CASE("single letter word evaluates to the trace entry") {
  const auto phi = qham::states::delta(half_two_block());
  CHECK(qham::states::evaluate_word(phi, {{0, 0}}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qham::states::evaluate_word(phi, {{0, 2}}) == 0.0);
}

TEST_CASE("adjacent row letters annihilate on a two block atom") {
  const auto phi = qham::states::delta(half_two_block());
  // u_00 u_01 = p(1-p) = 0
  CHECK(std::abs(qham::states::evaluate_word(phi, {{0, 0}, {0, 1}})) < 1e-14);
}

TEST_CASE("word letters outside the grid are rejected") {
  const auto phi = qham::states::delta_permutation(2, {0, 1});
  CHECK_THROWS_AS(qham::states::evaluate_word(phi, {{0, 2}}), qham::IndexOutOfRange);
}

TEST_CASE("birkhoff image is the weighted trace table") {
  const AtomicTrace id3(qham::magic::from_permutation(3, {0, 1, 2}));
  const AtomicTrace swap3(qham::magic::from_permutation(3, {1, 0, 2}));
  const StateMixture phi{{{0.5, id3}, {0.5, swap3}}};
  const auto image = qham::states::birkhoff(phi);
  CHECK(image(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(image(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(image(2, 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("convolution of mixtures is a-major with multiplied weights") {
  const auto a0 = AtomicTrace(qham::magic::from_permutation(3, {0, 1, 2}));
  const auto a1 = AtomicTrace(qham::magic::from_permutation(3, {1, 2, 0}));
  const auto b0 = AtomicTrace(qham::magic::from_permutation(3, {1, 0, 2}));
  const StateMixture phi{{{0.25, a0}, {0.75, a1}}};
  const StateMixture psi{{{1.0, b0}}};
  const auto conv = qham::states::convolve_states(phi, psi);
  REQUIRE(conv.size() == 2);
  CHECK(conv.at(0).weight == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(conv.at(1).weight == doctest::Approx(0.75).epsilon(1e-14));
  // first entry pairs a0 with b0: composition is the swap itself
  CHECK(conv.at(0).atom.rep.same_grid(qham::magic::from_permutation(3, {1, 0, 2}), 1e-12));
}

TEST_CASE("classicality detects scalar grids only") {
  CHECK(qham::states::is_classical(qham::states::delta_permutation(4, {2, 3, 0, 1})));
  CHECK_FALSE(qham::states::is_classical(qham::states::delta(half_two_block())));
  const auto sum = qham::magic::direct_sum(qham::magic::from_permutation(2, {0, 1}),
                                           qham::magic::from_permutation(2, {1, 0}));
  CHECK_FALSE(qham::states::is_classical(qham::states::delta(sum)));
}

TEST_CASE("classical permutation extraction round trips") {
  const std::vector<int> sigma = {3, 1, 0, 2};
  const AtomicTrace atom(qham::magic::from_permutation(4, sigma));
  CHECK(qham::states::classical_permutation(atom) == sigma);
  CHECK_THROWS_AS(qham::states::classical_permutation(AtomicTrace(half_two_block())),
                  qham::NotClassical);
}

TEST_CASE("word corpus enumerates short words and samples long ones") {
  const auto small = qham::states::word_corpus(2, {}, 1);
  CHECK(small.size() == 4 + 16);
  const auto big = qham::states::word_corpus(4, {}, 1);
  CHECK(big.size() == 16 + 256 + 200);
  qham::states::WordCorpusParams caps;
  caps.max_len = 1;
  CHECK(qham::states::word_corpus(3, caps, 1).size() == 9);
}
