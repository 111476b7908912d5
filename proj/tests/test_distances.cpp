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
#include "qham/config.hpp"
#include "qham/corpus.hpp"
#include "qham/distances.hpp"
#include "qham/errors.hpp"
#include "qham/rng.hpp"

using qham::Rng;
using qham::RunConfig;
using qham::linalg::Matrix;
using qham::states::AtomicTrace;
using qham::states::StateMixture;

namespace {

AtomicTrace half_two_block_atom() {
  const qham::linalg::ProjectionMatrix half{Matrix(Matrix::Constant(2, 2, 0.5))};
  return AtomicTrace(qham::magic::two_block(half, half));
}

StateMixture half_two_block_delta() {
  return qham::states::delta(half_two_block_atom().rep);
}

}  // namespace

TEST_CASE("overlap cost of a two block atom against itself is one half") {
  const auto atom = half_two_block_atom();
  CHECK(qham::dist::atom_cost_hamming(atom, atom) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("overlap cost of classical atoms is the permutation distance") {
  const AtomicTrace a(qham::magic::from_permutation(3, {0, 1, 2}));
  const AtomicTrace b(qham::magic::from_permutation(3, {1, 0, 2}));
  CHECK(qham::dist::atom_cost_hamming(a, b) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("embedding cost equals the overlap cost") {
  // commuting halves of the embedded difference give eigenvalues in {0, ±1},
  // so the normalized trace norm collapses to the overlap expression
  Rng rng(17);
  for (int t = 0; t < 12; ++t) {
    const int n = 2 + (t % 4);
    const AtomicTrace a(qham::corpus::random_representation(rng, n));
    const AtomicTrace b(qham::corpus::random_representation(rng, n));
    if (static_cast<long long>(a.rep.d()) * b.rep.d() > 4096) continue;
    CHECK(std::abs(qham::dist::atom_cost_l1(a, b) -
                   qham::dist::atom_cost_hamming(a, b)) < 1e-11);
  }
}

TEST_CASE("same-space couplings vanish at exact alignment") {
  const auto atom = half_two_block_atom();
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(qham::dist::atom_cost_l1_same_dim(atom, atom, id) < 1e-12);
  CHECK(qham::dist::atom_cost_meet_same_dim(atom, atom, id) < 1e-9);
}

TEST_CASE("same-space couplings need equal dimensions") {
  const auto atom = half_two_block_atom();
  const AtomicTrace scalar(qham::magic::from_permutation(4, {0, 1, 2, 3}));
  CHECK_THROWS_AS(qham::dist::atom_cost_l1_same_dim(atom, scalar, Matrix::Identity(2, 2)),
                  qham::DimensionMismatch);
}

TEST_CASE("unitary search finds the exact conjugation") {
  Rng rng(23);
  for (int t = 0; t < 3; ++t) {
    const auto base = qham::magic::two_block(qham::corpus::random_projection(rng, 2, 1),
                                             qham::corpus::random_projection(rng, 2, 1));
    const Matrix v = qham::corpus::haar_unitary(rng, 2);
    const AtomicTrace a(base);
    const AtomicTrace b(qham::magic::conjugate(base, v));
    const auto search = qham::dist::optimize_unitary(a, b, 8, 200, rng.raw());
    CHECK(search.cost <= 1e-6);
  }
}

TEST_CASE("unitary search returns zero against the same atom") {
  const auto atom = half_two_block_atom();
  const auto search = qham::dist::optimize_unitary(atom, atom, 2, 50, 1);
  CHECK(search.cost <= 1e-9);
}

TEST_CASE("word lower bound on the size-two swap pair") {
  const auto left = qham::states::delta_permutation(2, {0, 1});
  const auto right = qham::states::delta_permutation(2, {1, 0});
  CHECK(qham::dist::lower_bound_words(left, right, RunConfig{}) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("tensor self distance closed forms") {
  CHECK(qham::dist::self_distance_tensor(half_two_block_delta()) ==
        doctest::Approx(0.5).epsilon(1e-12));
  StateMixture half{{{0.5, half_two_block_atom()},
                     {0.5, AtomicTrace(qham::magic::from_permutation(4, {0, 1, 2, 3}))}}};
  CHECK(qham::dist::self_distance_tensor(half) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(qham::dist::self_distance_tensor(
            qham::states::delta_permutation(3, {1, 2, 0})) == 0.0);
}

TEST_CASE("disjoint support detection") {
  const auto e2 = qham::states::delta_permutation(2, {0, 1});
  const auto swap2 = qham::states::delta_permutation(2, {1, 0});
  CHECK(qham::dist::check_distance_one(e2, swap2));
  // in S_3 a transposition still fixes a point, so supports overlap
  const auto e3 = qham::states::delta_permutation(3, {0, 1, 2});
  const auto swap3 = qham::states::delta_permutation(3, {1, 0, 2});
  CHECK_FALSE(qham::dist::check_distance_one(e3, swap3));
  CHECK_FALSE(qham::dist::check_distance_one(e2, e2));
}

TEST_CASE("distance rejects mismatched group sizes") {
  const auto phi = qham::states::delta_permutation(2, {0, 1});
  const auto psi = qham::states::delta_permutation(3, {0, 1, 2});
  CHECK_THROWS_AS(qham::dist::distance_tensor(phi, psi, RunConfig{}), qham::SizeMismatch);
}

TEST_CASE("tensor distance of a classical point mass against itself is zero") {
  const auto phi = qham::states::delta_permutation(3, {1, 2, 0});
  const auto report = qham::dist::distance_tensor(phi, phi, RunConfig{});
  CHECK(report.upper == 0.0);
  CHECK(report.lower == 0.0);
  CHECK(report.exact_for_presented_atoms);
}

TEST_CASE("classical mixtures recover the permutation transport value") {
  Rng rng(41);
  const RunConfig config;
  for (int t = 0; t < 4; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = qham::corpus::random_classical_mixture(rng, n, 4);
    const auto psi = qham::corpus::random_classical_mixture(rng, n, 4);
    qham::transport::ClassicalMeasure m1, m2;
    for (const auto& wa : phi.atoms()) {
      m1.perms.push_back(qham::states::classical_permutation(wa.atom));
      m1.weights.push_back(wa.weight);
    }
    for (const auto& wa : psi.atoms()) {
      m2.perms.push_back(qham::states::classical_permutation(wa.atom));
      m2.weights.push_back(wa.weight);
    }
    const double w1 = qham::transport::classical_w1(m1, m2);
    for (auto metric :
         {qham::dist::Metric::kTensor, qham::dist::Metric::kFree, qham::dist::Metric::kL1}) {
      const auto report = qham::dist::distance(metric, phi, psi, config);
      CHECK(std::abs(report.upper - w1) < 1e-8);
      CHECK(std::abs(report.lower - w1) < 1e-8);
    }
  }
}

TEST_CASE("disjoint pair pins every metric at one") {
  const auto block = half_two_block_delta();
  const auto off = qham::states::delta_permutation(4, {2, 3, 0, 1});
  const RunConfig config;
  for (auto metric :
       {qham::dist::Metric::kTensor, qham::dist::Metric::kFree, qham::dist::Metric::kL1}) {
    const auto report = qham::dist::distance(metric, block, off, config);
    CHECK(std::abs(report.upper - 1.0) < 1e-9);
    CHECK(std::abs(report.lower - 1.0) < 1e-9);
  }
}

TEST_CASE("metric reports nest as a sandwich chain") {
  Rng rng(43);
  const RunConfig config;
  const auto phi = qham::corpus::random_mixture(rng, 4, 2);
  const auto psi = qham::corpus::random_mixture(rng, 4, 2);
  const auto tensor = qham::dist::distance_tensor(phi, psi, config);
  const auto free_report = qham::dist::distance_free(phi, psi, config);
  const auto l1 = qham::dist::distance_l1(phi, psi, config);
  CHECK(l1.upper <= free_report.upper + 1e-9);
  CHECK(free_report.upper <= tensor.upper + 1e-9);
  CHECK(tensor.upper <= 1.0 + 1e-9);
  CHECK(l1.lower <= l1.upper + 1e-12);
}

TEST_CASE("gap identity closed form") {
  const auto gap = qham::dist::birkhoff_gap_identity(
      qham::states::delta_permutation(4, {0, 1, 2, 3}), half_two_block_delta(),
      RunConfig{});
  CHECK(gap.lhs == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(gap.rhs == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("cost operator on classical grids is the scalar permutation distance") {
  const auto a = qham::magic::from_permutation(3, {0, 1, 2});
  const auto b = qham::magic::from_permutation(3, {1, 0, 2});
  const auto rep = qham::dist::build_cost_operator(a, b);
  CHECK(rep.matrix.dim() == 1);
  CHECK(rep.min_eig == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(qham::dist::build_cost_operator(a, a).min_eig ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("operator certificates are nonnegative on corpus tuples") {
  Rng rng(53);
  for (int t = 0; t < 4; ++t) {
    const int n = 2 + t;
    const auto a = qham::corpus::random_representation(rng, n);
    const auto b = qham::corpus::random_representation(rng, n);
    const auto c = qham::corpus::random_representation(rng, n);
    const auto e = qham::corpus::random_representation(rng, n);
    CHECK(qham::dist::build_cost_operator(a, b).min_eig >= -1e-9);
    CHECK(qham::dist::check_triangle_operator(a, b, c) >= -1e-9);
    CHECK(qham::dist::check_comult_inequality(a, b, c, e) >= -1e-9);
  }
}

TEST_CASE("convolution estimates stay subadditive") {
  Rng rng(59);
  const RunConfig config;
  const auto phi1 = qham::corpus::random_mixture(rng, 3, 2);
  const auto phi2 = qham::corpus::random_mixture(rng, 3, 2);
  const auto psi1 = qham::corpus::random_mixture(rng, 3, 2);
  const auto psi2 = qham::corpus::random_mixture(rng, 3, 2);
  for (auto metric :
       {qham::dist::Metric::kTensor, qham::dist::Metric::kFree, qham::dist::Metric::kL1}) {
    const auto sub =
        qham::dist::check_convolution_subadditivity(phi1, phi2, psi1, psi2, metric, config);
    CHECK(sub.lhs <= sub.rhs + 1e-8);
  }
}

TEST_CASE("total variation bound and hand value") {
  StateMixture mixed{{{0.5, AtomicTrace(qham::magic::from_permutation(3, {0, 1, 2}))},
                      {0.5, AtomicTrace(qham::magic::from_permutation(3, {1, 0, 2}))}}};
  const auto identity = qham::states::delta_permutation(3, {0, 1, 2});
  CHECK(qham::dist::tv_upper_bound_classical(mixed, identity) ==
        doctest::Approx(0.5).epsilon(1e-12));
  const auto identity4 = qham::states::delta_permutation(4, {0, 1, 2, 3});
  CHECK_THROWS_AS(qham::dist::tv_upper_bound_classical(half_two_block_delta(), identity4),
                  qham::NotClassical);
}

TEST_CASE("distance reports carry coupling witnesses") {
  const auto phi = qham::states::delta_permutation(3, {0, 1, 2});
  const auto psi = qham::states::delta_permutation(3, {1, 0, 2});
  const auto report = qham::dist::distance_tensor(phi, psi, RunConfig{});
  REQUIRE(!report.witnesses.empty());
  CHECK(report.plan.rows() == 1);
  CHECK(report.plan.cols() == 1);
}
