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

#include "qham/corpus.hpp"

#include <Eigen/QR>
#include <numeric>
#include <utility>

namespace qham::corpus {

using linalg::Matrix;
using linalg::ProjectionMatrix;

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(sigma[i], sigma[rng.uniform_int(0, i)]);
  }
  return sigma;
}

Matrix haar_unitary(Rng& rng, int d) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = linalg::Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const linalg::Complex diag = r(j, j);
    const double mag = std::abs(diag);
    q.col(j) *= (mag > 0) ? diag / mag : 1.0;
  }
  return q;
}

Matrix random_hermitian_direction(Rng& rng, int d) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = linalg::Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Matrix h = 0.5 * (g + g.adjoint().eval());
  const double norm = h.norm();
  if (norm > 0) h /= norm;
  return h;
}

linalg::HermitianMatrix random_hermitian(Rng& rng, int d) {
  return linalg::HermitianMatrix(random_hermitian_direction(rng, d));
}

ProjectionMatrix random_projection(Rng& rng, int d, int rank) {
  if (rank <= 0) return ProjectionMatrix::zero(d);
  if (rank >= d) return ProjectionMatrix::identity(d);
  const Matrix u = haar_unitary(rng, d);
  const Matrix basis = u.leftCols(rank);
  return ProjectionMatrix(Matrix(basis * basis.adjoint()));
}

std::vector<ProjectionMatrix> random_orthogonal_family(Rng& rng, int d, int parts) {
  if (parts < 1 || parts > d) {
    throw DimensionMismatch("orthogonal family needs 1 <= parts <= dim");
  }
  std::vector<int> sizes(parts, 1);
  for (int spare = d - parts; spare > 0; --spare) {
    const int bin = rng.uniform_int(0, parts);  // == parts leaves a column unused
    if (bin < parts) ++sizes[bin];
  }
  const Matrix u = haar_unitary(rng, d);
  std::vector<ProjectionMatrix> family;
  family.reserve(parts);
  int col = 0;
  for (int i = 0; i < parts; ++i) {
    const Matrix basis = u.middleCols(col, sizes[i]);
    col += sizes[i];
    family.emplace_back(Matrix(basis * basis.adjoint()));
  }
  return family;
}

magic::MagicUnitary random_classical(Rng& rng, int n) {
  return magic::from_permutation(n, random_permutation(rng, n));
}

magic::MagicUnitary random_representation(Rng& rng, int n) {
  const int kinds = (n == 4) ? 6 : 3;
  switch (rng.uniform_int(0, kinds - 1)) {
    case 0:
      return random_classical(rng, n);
    case 1:
      return magic::direct_sum(random_classical(rng, n), random_classical(rng, n));
    case 2: {
      const auto sum =
          magic::direct_sum(random_classical(rng, n), random_classical(rng, n));
      return magic::conjugate(sum, haar_unitary(rng, 2));
    }
    case 3:
      return magic::two_block(random_projection(rng, 2, 1), random_projection(rng, 2, 1));
    case 4: {
      const auto block =
          magic::two_block(random_projection(rng, 2, 1), random_projection(rng, 2, 1));
      return magic::conjugate(block, haar_unitary(rng, 2));
    }
    default: {
      const auto block =
          magic::two_block(random_projection(rng, 2, 1), random_projection(rng, 2, 1));
      return magic::direct_sum(block, random_classical(rng, 4));
    }
  }
}

namespace {

states::StateMixture build_mixture(Rng& rng, int n, int max_atoms, bool classical_only) {
  const int count = rng.uniform_int(1, max_atoms);
  std::vector<states::WeightedAtom> atoms;
  atoms.reserve(count);
  for (int a = 0; a < count; ++a) {
    auto rep = classical_only ? random_classical(rng, n) : random_representation(rng, n);
    atoms.push_back({rng.uniform(0.2, 1.0), states::AtomicTrace(std::move(rep))});
  }
  return states::normalize(states::StateMixture(std::move(atoms)));
}

}  // namespace

states::StateMixture random_classical_mixture(Rng& rng, int n, int max_atoms) {
  return build_mixture(rng, n, max_atoms, true);
}

states::StateMixture random_mixture(Rng& rng, int n, int max_atoms) {
  return build_mixture(rng, n, max_atoms, false);
}

}  // namespace qham::corpus
