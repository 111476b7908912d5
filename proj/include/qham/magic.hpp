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

#ifndef QHAM_MAGIC_HPP
#define QHAM_MAGIC_HPP

#include <string>
#include <vector>

#include "qham/linalg.hpp"

namespace qham::magic {

// An n×n grid of d×d complex projections whose rows and columns each sum to
// the identity. Cells are projections by construction; the sum conditions are
// checked by validate() and preserved by every constructor in this module.
class MagicUnitary {
 public:
  MagicUnitary(int n, int d, std::vector<linalg::ProjectionMatrix> grid);

  int n() const { return n_; }
  int d() const { return d_; }
  const linalg::ProjectionMatrix& cell(int i, int j) const;

  // Entrywise grid equality within tolerance; same n and d required.
  bool same_grid(const MagicUnitary& other, double tolerance) const;

 private:
  int n_;
  int d_;
  std::vector<linalg::ProjectionMatrix> grid_;  // row-major, n*n entries
};

// d = 1 grid of indicators: cell(i,j) = 1 iff sigma[i] = j. sigma holds
// 0-based images and must be a bijection of {0..n-1}.
MagicUnitary from_permutation(int n, const std::vector<int>& sigma);

// The standard nonclassical n = 4 construction from two projections of equal
// dimension: rows [p, 1−p, 0, 0], [1−p, p, 0, 0], [0, 0, q, 1−q],
// [0, 0, 1−q, q].
MagicUnitary two_block(const linalg::ProjectionMatrix& p, const linalg::ProjectionMatrix& q);

// Cell-wise u·P·u†. Preserves every grid relation; traces are unchanged.
MagicUnitary conjugate(const MagicUnitary& m, const linalg::Matrix& u);

// Block-diagonal join of two representations of the same n.
MagicUnitary direct_sum(const MagicUnitary& a, const MagicUnitary& b);

// Comultiplication composite: cell(i,j) = Σ_k a(i,k) ⊗ b(k,j), dimension
// a.d·b.d. On classical grids this composes the permutations: b's after a's.
MagicUnitary convolve(const MagicUnitary& a, const MagicUnitary& b,
                      int dim_cap = kDefaultDimCap);

struct ValidationReport {
  bool pass = false;
  double worst_hermiticity = 0.0;
  double worst_projection = 0.0;
  double worst_row_sum = 0.0;
  double worst_col_sum = 0.0;
  std::string detail;
};

// Residuals against the grid relations; passes iff all are ≤ tol::kMagicSums
// (sums) and the cell invariants hold.
ValidationReport validate(const MagicUnitary& m);

// Same residuals computed on raw matrices, for inputs that may not satisfy
// the cell invariants (file loading); never throws on bad numbers.
ValidationReport validate_cells(int n, int d, const std::vector<linalg::Matrix>& grid);

}  // namespace qham::magic

#endif  // QHAM_MAGIC_HPP
