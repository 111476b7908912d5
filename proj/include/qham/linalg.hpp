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

#ifndef QHAM_LINALG_HPP
#define QHAM_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qham/config.hpp"
#include "qham/errors.hpp"

namespace qham::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Largest absolute entry of a complex matrix.
double max_abs(const Matrix& m);

// Square matrix equal to its conjugate transpose within tol::kHermiticity.
// The stored value is symmetrized, (m + m†)/2, so diagonals are exactly real.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m);

  const Matrix& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

// Hermitian and idempotent: ‖P·P − P‖_max ≤ tol::kProjection. Eigenvalues are
// then pinned near {0,1}; rank decisions elsewhere cut at 1/2.
class ProjectionMatrix {
 public:
  explicit ProjectionMatrix(Matrix m);
  explicit ProjectionMatrix(HermitianMatrix m);

  static ProjectionMatrix zero(Eigen::Index dim);
  static ProjectionMatrix identity(Eigen::Index dim);

  const Matrix& mat() const { return h_.mat(); }
  const HermitianMatrix& hermitian() const { return h_; }
  Eigen::Index dim() const { return h_.dim(); }

 private:
  HermitianMatrix h_;
};

// (1/dim)·Σ_i m[i][i].real
double normalized_trace(const HermitianMatrix& m);
double normalized_trace(const Matrix& m);

// (1/dim)·Σ|eigenvalues|; the normalized L¹ norm of a Hermitian operator.
double trace_norm(const HermitianMatrix& m);

double min_eigenvalue(const HermitianMatrix& m);

// Ascending eigenvalues of a Hermitian matrix.
RealVector eigenvalues(const HermitianMatrix& m);

// Orthonormal basis of the range (eigenvectors with eigenvalue > 1/2),
// returned as columns; may have zero columns.
Matrix range_basis(const ProjectionMatrix& p);

// Orthogonal projection onto Ran(p) ∩ Ran(q), computed by intersecting the
// ranges: SVD of U_p† U_q, keeping singular directions with value ≥ 1 − 1e-9.
ProjectionMatrix meet(const ProjectionMatrix& p, const ProjectionMatrix& q);

// Smallest projection dominating both: 1 − meet(1−p, 1−q).
ProjectionMatrix join(const ProjectionMatrix& p, const ProjectionMatrix& q);

// (p·q·p)^(2^log2_power), by repeated squaring. Converges to meet(p,q) in the
// limit; kept as an independent slow path to cross-check meet.
Matrix meet_iterate(const ProjectionMatrix& p, const ProjectionMatrix& q,
                    int log2_power = 8);

// Cosines of the principal angles between the ranges (singular values of
// U_p† U_q), descending. Used to exclude near-tangent pairs from the
// meet_iterate cross-check, whose convergence rate degenerates there.
std::vector<double> principal_angle_cosines(const ProjectionMatrix& p,
                                            const ProjectionMatrix& q);

// Kronecker product; a ⊗ b has dimension dim(a)·dim(b).
Matrix kron(const Matrix& a, const Matrix& b, int dim_cap = kDefaultDimCap);
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b,
                     int dim_cap = kDefaultDimCap);

}  // namespace qham::linalg

#endif  // QHAM_LINALG_HPP
