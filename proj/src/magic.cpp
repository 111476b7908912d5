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

#include "qham/magic.hpp"

#include <algorithm>
#include <utility>

namespace qham::magic {

using linalg::Matrix;
using linalg::ProjectionMatrix;

MagicUnitary::MagicUnitary(int n, int d, std::vector<ProjectionMatrix> grid)
    : n_(n), d_(d), grid_(std::move(grid)) {
  if (n_ <= 0 || d_ <= 0) {
    throw DimensionMismatch("magic unitary needs n ≥ 1 and d ≥ 1");
  }
  if (grid_.size() != static_cast<std::size_t>(n_) * n_) {
    throw DimensionMismatch("magic unitary grid must have n² cells");
  }
  for (const auto& cell : grid_) {
    if (cell.dim() != d_) {
      throw DimensionMismatch("magic unitary cell dimension differs from d");
    }
  }
}

const ProjectionMatrix& MagicUnitary::cell(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw IndexOutOfRange("cell index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside " + std::to_string(n_) + "x" + std::to_string(n_));
  }
  return grid_[static_cast<std::size_t>(i) * n_ + j];
}

bool MagicUnitary::same_grid(const MagicUnitary& other, double tolerance) const {
  if (n_ != other.n_ || d_ != other.d_) return false;
  for (std::size_t c = 0; c < grid_.size(); ++c) {
    if (linalg::max_abs(grid_[c].mat() - other.grid_[c].mat()) > tolerance) return false;
  }
  return true;
}

MagicUnitary from_permutation(int n, const std::vector<int>& sigma) {
  if (n <= 0 || sigma.size() != static_cast<std::size_t>(n)) {
    throw InvalidPermutation("permutation length differs from n");
  }
  std::vector<bool> hit(n, false);
  for (int image : sigma) {
    if (image < 0 || image >= n || hit[image]) {
      throw InvalidPermutation("not a bijection of {0..n-1}");
    }
    hit[image] = true;
  }
  std::vector<ProjectionMatrix> grid;
  grid.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix cell(1, 1);
      cell(0, 0) = (sigma[i] == j) ? 1.0 : 0.0;
      grid.emplace_back(cell);
    }
  }
  return MagicUnitary(n, 1, std::move(grid));
}

MagicUnitary two_block(const ProjectionMatrix& p, const ProjectionMatrix& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("two_block requires projections of equal dimension");
  }
  const Eigen::Index d = p.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix zero = Matrix::Zero(d, d);
  const Matrix pc = id - p.mat();
  const Matrix qc = id - q.mat();
  const Matrix cells[4][4] = {
      {p.mat(), pc, zero, zero},
      {pc, p.mat(), zero, zero},
      {zero, zero, q.mat(), qc},
      {zero, zero, qc, q.mat()},
  };
  std::vector<ProjectionMatrix> grid;
  grid.reserve(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      grid.emplace_back(cells[i][j]);
    }
  }
  return MagicUnitary(4, static_cast<int>(d), std::move(grid));
}

MagicUnitary conjugate(const MagicUnitary& m, const Matrix& u) {
  if (u.rows() != m.d() || u.cols() != m.d()) {
    throw DimensionMismatch("conjugating unitary has wrong dimension");
  }
  const double unitary_dev =
      linalg::max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
  if (unitary_dev > tol::kHermiticity) {
    throw NotUnitary("u†u deviates from identity by " + std::to_string(unitary_dev));
  }
  std::vector<ProjectionMatrix> grid;
  grid.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      grid.emplace_back(Matrix(u * m.cell(i, j).mat() * u.adjoint()));
    }
  }
  return MagicUnitary(m.n(), m.d(), std::move(grid));
}

MagicUnitary direct_sum(const MagicUnitary& a, const MagicUnitary& b) {
  if (a.n() != b.n()) {
    throw SizeMismatch("direct_sum requires equal n");
  }
  const int d = a.d() + b.d();
  std::vector<ProjectionMatrix> grid;
  grid.reserve(static_cast<std::size_t>(a.n()) * a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      Matrix cell = Matrix::Zero(d, d);
      cell.topLeftCorner(a.d(), a.d()) = a.cell(i, j).mat();
      cell.bottomRightCorner(b.d(), b.d()) = b.cell(i, j).mat();
      grid.emplace_back(std::move(cell));
    }
  }
  return MagicUnitary(a.n(), d, std::move(grid));
}

MagicUnitary convolve(const MagicUnitary& a, const MagicUnitary& b, int dim_cap) {
  if (a.n() != b.n()) {
    throw SizeMismatch("convolve requires equal n");
  }
  const long long product_dim = static_cast<long long>(a.d()) * b.d();
  if (product_dim > dim_cap) {
    throw DimensionOverflow("convolve dim " + std::to_string(product_dim) +
                            " exceeds cap " + std::to_string(dim_cap));
  }
  const int n = a.n();
  const Eigen::Index d = static_cast<Eigen::Index>(product_dim);
  std::vector<ProjectionMatrix> grid;
  grid.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix cell = Matrix::Zero(d, d);
      for (int k = 0; k < n; ++k) {
        cell += linalg::kron(a.cell(i, k).mat(), b.cell(k, j).mat(), dim_cap);
      }
      grid.emplace_back(std::move(cell));
    }
  }
  return MagicUnitary(n, static_cast<int>(d), std::move(grid));
}

namespace {

ValidationReport validate_impl(int n, int d, const std::vector<const Matrix*>& cells) {
  ValidationReport report;
  const Matrix id = Matrix::Identity(d, d);
  for (const Matrix* cell : cells) {
    report.worst_hermiticity =
        std::max(report.worst_hermiticity, linalg::max_abs(*cell - cell->adjoint()));
    report.worst_projection =
        std::max(report.worst_projection, linalg::max_abs(*cell * *cell - *cell));
  }
  for (int i = 0; i < n; ++i) {
    Matrix row_sum = Matrix::Zero(d, d);
    Matrix col_sum = Matrix::Zero(d, d);
    for (int j = 0; j < n; ++j) {
      row_sum += *cells[static_cast<std::size_t>(i) * n + j];
      col_sum += *cells[static_cast<std::size_t>(j) * n + i];
    }
    report.worst_row_sum = std::max(report.worst_row_sum, linalg::max_abs(row_sum - id));
    report.worst_col_sum = std::max(report.worst_col_sum, linalg::max_abs(col_sum - id));
  }
  report.pass = report.worst_hermiticity <= tol::kHermiticity &&
                report.worst_projection <= tol::kProjection &&
                report.worst_row_sum <= tol::kMagicSums &&
                report.worst_col_sum <= tol::kMagicSums;
  if (!report.pass) {
    report.detail = "hermiticity " + std::to_string(report.worst_hermiticity) +
                    ", projection " + std::to_string(report.worst_projection) +
                    ", row sum " + std::to_string(report.worst_row_sum) + ", col sum " +
                    std::to_string(report.worst_col_sum);
  }
  return report;
}

}  // namespace

ValidationReport validate(const MagicUnitary& m) {
  std::vector<const Matrix*> cells;
  cells.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      cells.push_back(&m.cell(i, j).mat());
    }
  }
  return validate_impl(m.n(), m.d(), cells);
}

ValidationReport validate_cells(int n, int d, const std::vector<Matrix>& grid) {
  if (n <= 0 || d <= 0 || grid.size() != static_cast<std::size_t>(n) * n) {
    ValidationReport report;
    report.pass = false;
    report.detail = "grid shape does not match n";
    return report;
  }
  for (const Matrix& cell : grid) {
    if (cell.rows() != d || cell.cols() != d) {
      ValidationReport report;
      report.pass = false;
      report.detail = "cell dimension does not match d";
      return report;
    }
  }
  std::vector<const Matrix*> cells;
  cells.reserve(grid.size());
  for (const Matrix& cell : grid) cells.push_back(&cell);
  return validate_impl(n, d, cells);
}

}  // namespace qham::magic
