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

#include "qham/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <string>

namespace qham::linalg {

namespace {

// Singular directions at least this close to 1 count as shared range
// directions when intersecting ranges.
constexpr double kIntersectionThreshold = 1.0 - 1e-9;

Eigen::SelfAdjointEigenSolver<Matrix> solved(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
  if (es.info() != Eigen::Success) {
    throw EigenFailure("eigendecomposition failed, dim " + std::to_string(m.dim()));
  }
  return es;
}

}  // namespace

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(Matrix m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian matrix must be square, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.rows() == 0) {
    throw DimensionMismatch("hermitian matrix must be nonempty");
  }
  const double dev = max_abs(m - m.adjoint());
  if (dev > tol::kHermiticity) {
    throw NotHermitian("hermiticity deviation " + std::to_string(dev));
  }
  m_ = 0.5 * (m + m.adjoint().eval());
}

ProjectionMatrix::ProjectionMatrix(Matrix m) : ProjectionMatrix(HermitianMatrix(std::move(m))) {}

ProjectionMatrix::ProjectionMatrix(HermitianMatrix m) : h_(std::move(m)) {
  const Matrix& p = h_.mat();
  const double dev = max_abs(p * p - p);
  if (dev > tol::kProjection) {
    throw NotProjection("idempotency deviation " + std::to_string(dev));
  }
}

ProjectionMatrix ProjectionMatrix::zero(Eigen::Index dim) {
  return ProjectionMatrix(Matrix::Zero(dim, dim));
}

ProjectionMatrix ProjectionMatrix::identity(Eigen::Index dim) {
  return ProjectionMatrix(Matrix::Identity(dim, dim));
}

double normalized_trace(const Matrix& m) {
  return m.trace().real() / static_cast<double>(m.rows());
}

double normalized_trace(const HermitianMatrix& m) { return normalized_trace(m.mat()); }

double trace_norm(const HermitianMatrix& m) {
  return solved(m).eigenvalues().cwiseAbs().sum() / static_cast<double>(m.dim());
}

double min_eigenvalue(const HermitianMatrix& m) {
  return solved(m).eigenvalues().minCoeff();
}

RealVector eigenvalues(const HermitianMatrix& m) { return solved(m).eigenvalues(); }

Matrix range_basis(const ProjectionMatrix& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(p.mat());
  if (es.info() != Eigen::Success) {
    throw EigenFailure("eigendecomposition failed on projection");
  }
  const Eigen::Index d = p.dim();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (es.eigenvalues()(i) > 0.5) ++rank;
  }
  Matrix basis(d, rank);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (es.eigenvalues()(i) > 0.5) basis.col(col++) = es.eigenvectors().col(i);
  }
  return basis;
}

ProjectionMatrix meet(const ProjectionMatrix& p, const ProjectionMatrix& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("meet requires equal dimensions");
  }
  const Matrix up = range_basis(p);
  const Matrix uq = range_basis(q);
  if (up.cols() == 0 || uq.cols() == 0) {
    return ProjectionMatrix::zero(p.dim());
  }
  Eigen::JacobiSVD<Matrix> svd(up.adjoint() * uq, Eigen::ComputeThinV);
  Eigen::Index shared = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) >= kIntersectionThreshold) ++shared;
  }
  if (shared == 0) {
    return ProjectionMatrix::zero(p.dim());
  }
  // Singular values are sorted descending, so shared directions lead.
  const Matrix basis = uq * svd.matrixV().leftCols(shared);
  return ProjectionMatrix(basis * basis.adjoint());
}

ProjectionMatrix join(const ProjectionMatrix& p, const ProjectionMatrix& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("join requires equal dimensions");
  }
  const Matrix id = Matrix::Identity(p.dim(), p.dim());
  const ProjectionMatrix complement =
      meet(ProjectionMatrix(id - p.mat()), ProjectionMatrix(id - q.mat()));
  return ProjectionMatrix(id - complement.mat());
}

Matrix meet_iterate(const ProjectionMatrix& p, const ProjectionMatrix& q, int log2_power) {
  Matrix a = p.mat() * q.mat() * p.mat();
  for (int s = 0; s < log2_power; ++s) {
    a = (a * a).eval();
  }
  return a;
}

std::vector<double> principal_angle_cosines(const ProjectionMatrix& p,
                                            const ProjectionMatrix& q) {
  const Matrix up = range_basis(p);
  const Matrix uq = range_basis(q);
  if (up.cols() == 0 || uq.cols() == 0) return {};
  Eigen::JacobiSVD<Matrix> svd(up.adjoint() * uq);
  std::vector<double> cosines(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
  return cosines;
}

Matrix kron(const Matrix& a, const Matrix& b, int dim_cap) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (ra * rb > dim_cap || ca * cb > dim_cap) {
    throw DimensionOverflow("kron dim " + std::to_string(ra * rb) + " exceeds cap " +
                            std::to_string(dim_cap));
  }
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b, int dim_cap) {
  return HermitianMatrix(kron(a.mat(), b.mat(), dim_cap));
}

}  // namespace qham::linalg
