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

#ifndef QHAM_CORPUS_HPP
#define QHAM_CORPUS_HPP

#include <vector>

#include "qham/rng.hpp"
#include "qham/states.hpp"

namespace qham::corpus {

// Seeded generators behind the property suite and the acceptance runs. Every
// generator consumes randomness only through the passed Rng, so a fixed seed
// reproduces the corpus bit for bit.

std::vector<int> random_permutation(Rng& rng, int n);

linalg::Matrix haar_unitary(Rng& rng, int d);

// Gaussian Hermitian matrix, normalized to unit Frobenius norm.
linalg::Matrix random_hermitian_direction(Rng& rng, int d);

linalg::HermitianMatrix random_hermitian(Rng& rng, int d);

// Projection of the given rank onto a Haar-random subspace.
linalg::ProjectionMatrix random_projection(Rng& rng, int d, int rank);

// Mutually orthogonal projections (ranks ≥ 1, ranges need not exhaust the
// space). Requires 1 ≤ parts ≤ d.
std::vector<linalg::ProjectionMatrix> random_orthogonal_family(Rng& rng, int d, int parts);

magic::MagicUnitary random_classical(Rng& rng, int n);

// A representation drawn from the kinds the artifact can build: classical
// grids, block-diagonal joins of classicals (conjugated or not), and for
// n = 4 the two-projection construction and its conjugates. Dimensions stay
// small (d ≤ 3) so operator checks on tuples fit under the default cap.
magic::MagicUnitary random_representation(Rng& rng, int n);

states::StateMixture random_classical_mixture(Rng& rng, int n, int max_atoms);

states::StateMixture random_mixture(Rng& rng, int n, int max_atoms);

}  // namespace qham::corpus

#endif  // QHAM_CORPUS_HPP
