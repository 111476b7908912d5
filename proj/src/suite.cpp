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

#include "qham/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "qham/corpus.hpp"
#include "qham/distances.hpp"
#include "qham/rng.hpp"
#include "qham/transport.hpp"

namespace qham::suite {

using linalg::Matrix;
using linalg::ProjectionMatrix;
using states::AtomicTrace;
using states::StateMixture;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string brief(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

CheckResult finish(const RunConfig& cfg, std::string name, double worst,
                   double default_tol, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.worst = worst;
  r.tol = cfg.tolerance(r.name, default_tol);
  r.pass = worst <= r.tol;
  r.detail = std::move(detail);
  return r;
}

CheckResult skipped(const RunConfig& cfg, std::string name, double default_tol,
                    std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.tol = cfg.tolerance(r.name, default_tol);
  r.skipped = true;
  r.pass = true;
  r.detail = std::move(detail);
  return r;
}

Rng check_rng(const RunConfig& cfg, std::uint64_t salt) {
  return Rng(Rng::mix(cfg.seed, salt, 0x715eULL));
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return all;
}

std::vector<int> compose(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

// Projections over a common orthonormal frame intersect exactly along the
// shared columns, giving nontrivial meets the generic draw rarely produces.
std::vector<ProjectionMatrix> frame_projections(Rng& rng, int d, int count,
                                                int columns_each) {
  const Matrix u = corpus::haar_unitary(rng, d);
  std::vector<ProjectionMatrix> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Matrix basis(d, columns_each);
    std::vector<int> cols;
    while (static_cast<int>(cols.size()) < columns_each) {
      const int pick = rng.uniform_int(0, d - 1);
      if (std::find(cols.begin(), cols.end(), pick) == cols.end()) cols.push_back(pick);
    }
    for (int j = 0; j < columns_each; ++j) basis.col(j) = u.col(cols[j]);
    out.emplace_back(Matrix(basis * basis.adjoint()));
  }
  return out;
}

ProjectionMatrix generic_projection(Rng& rng, int d) {
  return corpus::random_projection(rng, d, rng.uniform_int(1, d - 1));
}

magic::MagicUnitary lifted_permutation(int n, const std::vector<int>& sigma) {
  const auto rep = magic::from_permutation(n, sigma);
  return magic::direct_sum(rep, rep);
}

states::StateMixture delta_two_block(Rng& rng) {
  return states::delta(
      magic::two_block(corpus::random_projection(rng, 2, 1),
                       corpus::random_projection(rng, 2, 1)));
}

// ---------------------------------------------------------------------------
// linalg properties

CheckResult check_meet_commutative(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 1);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const int d = rng.uniform_int(2, 8);
    const auto p = generic_projection(rng, d);
    const auto q = generic_projection(rng, d);
    worst = std::max(worst,
                     linalg::max_abs(linalg::meet(p, q).mat() - linalg::meet(q, p).mat()));
  }
  return finish(cfg, "meet_commutative", worst, tol::kMeetAgreement);
}

CheckResult check_meet_idempotent(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 2);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const int d = rng.uniform_int(2, 8);
    const auto p = generic_projection(rng, d);
    worst = std::max(worst, linalg::max_abs(linalg::meet(p, p).mat() - p.mat()));
  }
  return finish(cfg, "meet_idempotent", worst, tol::kMeetAgreement);
}

CheckResult check_meet_associative(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 3);
  double worst = 0.0;
  for (int t = 0; t < 40; ++t) {
    const int d = rng.uniform_int(3, 8);
    std::vector<ProjectionMatrix> trio;
    if (t % 2 == 0) {
      trio = frame_projections(rng, d, 3, rng.uniform_int(2, d - 1));
    } else {
      for (int i = 0; i < 3; ++i) trio.push_back(generic_projection(rng, d));
    }
    const auto left = linalg::meet(linalg::meet(trio[0], trio[1]), trio[2]);
    const auto right = linalg::meet(trio[0], linalg::meet(trio[1], trio[2]));
    worst = std::max(worst, linalg::max_abs(left.mat() - right.mat()));
  }
  return finish(cfg, "meet_associative", worst, tol::kMeetAgreement);
}

CheckResult check_trace_identity(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 4);
  double worst = 0.0;
  for (int t = 0; t < 60; ++t) {
    const int d = rng.uniform_int(2, 8);
    ProjectionMatrix p = generic_projection(rng, d);
    ProjectionMatrix q = generic_projection(rng, d);
    if (t % 3 == 0 && d >= 3) {
      auto pair = frame_projections(rng, d, 2, rng.uniform_int(2, d - 1));
      p = pair[0];
      q = pair[1];
    }
    const double lhs = linalg::normalized_trace(linalg::join(p, q).hermitian()) +
                       linalg::normalized_trace(linalg::meet(p, q).hermitian());
    const double rhs = linalg::normalized_trace(p.hermitian()) +
                       linalg::normalized_trace(q.hermitian());
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return finish(cfg, "trace_identity", worst, tol::kTraceIdentity);
}

CheckResult check_meet_iterate_agreement(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 5);
  double worst_norm = 0.0;
  double worst_trace = 0.0;
  int excluded = 0;
  for (int t = 0; t < 40; ++t) {
    const int d = rng.uniform_int(2, 6);
    ProjectionMatrix p = generic_projection(rng, d);
    ProjectionMatrix q = generic_projection(rng, d);
    if (t % 3 == 0 && d >= 3) {
      auto pair = frame_projections(rng, d, 2, rng.uniform_int(2, d - 1));
      p = pair[0];
      q = pair[1];
    }
    bool near_tangent = false;
    for (double c : linalg::principal_angle_cosines(p, q)) {
      if (c * c > 1.0 - 1e-6 && c < 1.0 - 1e-9) near_tangent = true;
    }
    if (near_tangent) {
      ++excluded;
      continue;
    }
    // 24 squarings: the iterate's rate is quadratic in the largest
    // non-intersection principal cosine, and 2^24 drives every retained pair
    // below the comparison tolerance.
    const Matrix iterate = linalg::meet_iterate(p, q, 24);
    const auto met = linalg::meet(p, q);
    worst_norm = std::max(worst_norm, linalg::max_abs(met.mat() - iterate));
    worst_trace = std::max(worst_trace,
                           std::abs(linalg::normalized_trace(met.hermitian()) -
                                    linalg::normalized_trace(iterate)));
  }
  const double worst = std::max(worst_norm, worst_trace * (tol::kIterateMaxNorm /
                                                           tol::kIterateTrace));
  return finish(cfg, "meet_iterate_agreement", worst, tol::kIterateMaxNorm,
                "excluded " + std::to_string(excluded) + " near-tangent pairs; trace gap " +
                    brief(worst_trace));
}

CheckResult check_tensor_versus_min(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 6);
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const int da = 2;
    const int db = rng.uniform_int(2, 4);
    auto left_pair = frame_projections(rng, da, 2, 1);
    auto right_pair = frame_projections(rng, db, 2, rng.uniform_int(1, db - 1));
    if (t % 2 == 0) {
      left_pair = {generic_projection(rng, da), generic_projection(rng, da)};
      right_pair = {generic_projection(rng, db), generic_projection(rng, db)};
    }
    const ProjectionMatrix lhs = linalg::meet(
        ProjectionMatrix(linalg::kron(left_pair[0].mat(), right_pair[0].mat())),
        ProjectionMatrix(linalg::kron(left_pair[1].mat(), right_pair[1].mat())));
    const Matrix rhs = linalg::kron(linalg::meet(left_pair[0], left_pair[1]).mat(),
                                    linalg::meet(right_pair[0], right_pair[1]).mat());
    worst = std::max(worst, linalg::max_abs(lhs.mat() - rhs));
  }
  return finish(cfg, "tensor_versus_min", worst, tol::kMeetAgreement);
}

CheckResult check_min_versus_sum(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 7);
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const int d = rng.uniform_int(3, 8);
    const int parts = rng.uniform_int(1, std::min(3, d));
    const auto ps = corpus::random_orthogonal_family(rng, d, parts);
    const auto qs = corpus::random_orthogonal_family(rng, d, parts);
    Matrix sum_p = Matrix::Zero(d, d);
    Matrix sum_q = Matrix::Zero(d, d);
    Matrix sum_meet = Matrix::Zero(d, d);
    for (int i = 0; i < parts; ++i) {
      sum_p += ps[i].mat();
      sum_q += qs[i].mat();
      sum_meet += linalg::meet(ps[i], qs[i]).mat();
    }
    const double value = linalg::min_eigenvalue(linalg::HermitianMatrix(
        linalg::meet(ProjectionMatrix(sum_p), ProjectionMatrix(sum_q)).mat() - sum_meet));
    worst = std::max(worst, -value);
  }
  return finish(cfg, "min_versus_sum", worst, tol::kMinVersusSum);
}

CheckResult check_powers_stormer(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 8);
  double worst = 0.0;
  for (int t = 0; t < 60; ++t) {
    const int d = rng.uniform_int(2, 8);
    const auto p = generic_projection(rng, d);
    const auto q = generic_projection(rng, d);
    const Matrix diff = p.mat() - q.mat();
    const double hs2 = (diff.adjoint() * diff).trace().real() / d;
    const double l1 = linalg::trace_norm(linalg::HermitianMatrix(diff));
    worst = std::max(worst, hs2 - l1);
  }
  return finish(cfg, "powers_stormer", worst, tol::kPowersStormer);
}

CheckResult check_kron_trace_multiplicative(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 9);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto a = corpus::random_hermitian(rng, rng.uniform_int(2, 4));
    const auto b = corpus::random_hermitian(rng, rng.uniform_int(2, 4));
    const double lhs = linalg::normalized_trace(linalg::kron(a, b));
    const double rhs = linalg::normalized_trace(a) * linalg::normalized_trace(b);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return finish(cfg, "kron_trace_multiplicative", worst, 1e-12);
}

// ---------------------------------------------------------------------------
// magic properties

CheckResult check_convolve_coassociative(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 10);
  double worst = 0.0;
  int evaluated = 0;
  for (int t = 0; t < 10; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto a = corpus::random_representation(rng, n);
    const auto b = corpus::random_representation(rng, n);
    const auto c = corpus::random_representation(rng, n);
    if (static_cast<long long>(a.d()) * b.d() * c.d() > cfg.dim_cap) continue;
    const AtomicTrace left(magic::convolve(magic::convolve(a, b, cfg.dim_cap), c,
                                           cfg.dim_cap));
    const AtomicTrace right(magic::convolve(a, magic::convolve(b, c, cfg.dim_cap),
                                            cfg.dim_cap));
    worst = std::max(worst, (left.omega - right.omega).cwiseAbs().maxCoeff());
    ++evaluated;
  }
  if (evaluated == 0) {
    return skipped(cfg, "convolve_coassociative", 1e-10,
                   "all triples beyond dimension cap");
  }
  return finish(cfg, "convolve_coassociative", worst, 1e-10);
}

CheckResult check_convolve_classical_exact(const RunConfig& cfg) {
  double worst = 0.0;
  const auto s3 = all_permutations(3);
  for (const auto& sigma : s3) {
    for (const auto& sigma2 : s3) {
      const auto conv = magic::convolve(magic::from_permutation(3, sigma),
                                        magic::from_permutation(3, sigma2));
      const auto expected = magic::from_permutation(3, compose(sigma, sigma2));
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          worst = std::max(
              worst, linalg::max_abs(conv.cell(i, j).mat() - expected.cell(i, j).mat()));
        }
      }
    }
  }
  return finish(cfg, "convolve_classical_exact", worst, 0.0);
}

CheckResult check_row_orthogonality(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 11);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + (t % 4);
    const auto m = corpus::random_representation(rng, n);
    for (int i = 0; i < m.n(); ++i) {
      for (int j = 0; j < m.n(); ++j) {
        for (int j2 = j + 1; j2 < m.n(); ++j2) {
          worst = std::max(worst, linalg::max_abs(m.cell(i, j).mat() * m.cell(i, j2).mat()));
        }
      }
    }
  }
  return finish(cfg, "row_orthogonality", worst, tol::kRowOrthogonality);
}

CheckResult check_validate_corpus(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 12);
  double worst = 0.0;
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + (t % 4);
    auto m = corpus::random_representation(rng, n);
    if (t % 5 == 0) {
      const auto other = corpus::random_representation(rng, n);
      if (static_cast<long long>(m.d()) * other.d() <= cfg.dim_cap) {
        m = magic::convolve(m, other, cfg.dim_cap);
      }
    }
    const auto report = magic::validate(m);
    worst = std::max({worst, report.worst_row_sum, report.worst_col_sum,
                      report.worst_projection});
    if (!report.pass) worst = std::max(worst, 1.0);
    ++checked;
  }
  return finish(cfg, "validate_corpus", worst, tol::kMagicSums,
                std::to_string(checked) + " representations");
}

// ---------------------------------------------------------------------------
// states properties

CheckResult check_birkhoff_intertwines_convolution(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 13);
  double worst = 0.0;
  int evaluated = 0;
  for (int t = 0; t < 12; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_mixture(rng, n, 2);
    const auto psi = corpus::random_mixture(rng, n, 2);
    try {
      const auto conv = states::convolve_states(phi, psi, cfg.dim_cap);
      const linalg::RealMatrix lhs = states::birkhoff(conv);
      const linalg::RealMatrix rhs = states::birkhoff(phi) * states::birkhoff(psi);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      ++evaluated;
    } catch (const DimensionOverflow&) {
    }
  }
  if (evaluated == 0) {
    return skipped(cfg, "birkhoff_intertwines_convolution", tol::kIntertwine,
                   "all instances beyond dimension cap");
  }
  return finish(cfg, "birkhoff_intertwines_convolution", worst, tol::kIntertwine);
}

CheckResult check_word_conjugation_invariant(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 14);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_mixture(rng, n, 2);
    std::vector<states::WeightedAtom> conjugated;
    for (const auto& wa : phi.atoms()) {
      const auto u = corpus::haar_unitary(rng, wa.atom.rep.d());
      conjugated.push_back({wa.weight, AtomicTrace(magic::conjugate(wa.atom.rep, u))});
    }
    const StateMixture psi{std::move(conjugated)};
    for (int w = 0; w < 10; ++w) {
      states::Word word;
      const int len = rng.uniform_int(1, 3);
      for (int l = 0; l < len; ++l) {
        word.push_back({rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1)});
      }
      worst = std::max(worst, std::abs(states::evaluate_word(phi, word) -
                                       states::evaluate_word(psi, word)));
    }
  }
  return finish(cfg, "word_conjugation_invariant", worst, 1e-10);
}

CheckResult check_classical_word_expectation(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 15);
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_classical_mixture(rng, n, 4);
    std::vector<std::vector<int>> perms;
    for (const auto& wa : phi.atoms()) {
      perms.push_back(states::classical_permutation(wa.atom));
    }
    for (int w = 0; w < 10; ++w) {
      states::Word word;
      const int len = rng.uniform_int(1, 3);
      for (int l = 0; l < len; ++l) {
        word.push_back({rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1)});
      }
      double expectation = 0.0;
      for (std::size_t a = 0; a < perms.size(); ++a) {
        double indicator = 1.0;
        for (const auto& [i, j] : word) {
          indicator *= (perms[a][i] == j) ? 1.0 : 0.0;
        }
        expectation += phi.at(a).weight * indicator;
      }
      worst = std::max(worst, std::abs(states::evaluate_word(phi, word) - expectation));
    }
  }
  return finish(cfg, "classical_word_expectation", worst, 0.0);
}

// ---------------------------------------------------------------------------
// transport properties

std::vector<double> random_weights(Rng& rng, int count) {
  std::vector<double> w(count);
  double sum = 0.0;
  for (int i = 0; i < count; ++i) {
    w[i] = (rng.uniform() < 0.2 && count > 1) ? 0.0 : rng.uniform(0.05, 1.0);
    sum += w[i];
  }
  if (sum <= 0.0) {
    w[0] = 1.0;
    sum = 1.0;
  }
  for (double& x : w) x /= sum;
  return w;
}

double ot_oracle_worst(Rng& rng, int instances) {
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    const int m = rng.uniform_int(1, 4);
    const int k = rng.uniform_int(1, 4);
    const auto mu = random_weights(rng, m);
    const auto nu = random_weights(rng, k);
    linalg::RealMatrix cost(m, k);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) cost(i, j) = rng.uniform();
    }
    const double solved = transport::solve_ot(mu, nu, cost).cost;
    const double brute = transport::brute_force_ot(mu, nu, cost);
    worst = std::max(worst, std::abs(solved - brute));
  }
  return worst;
}

CheckResult check_ot_oracle_agreement(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 16);
  return finish(cfg, "ot_oracle_agreement", ot_oracle_worst(rng, 200), tol::kOtOracle);
}

CheckResult check_ot_triangle_gluing(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 17);
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const int support = rng.uniform_int(2, 5);
    std::vector<std::vector<int>> perms;
    for (int s = 0; s < support; ++s) perms.push_back(corpus::random_permutation(rng, 4));
    linalg::RealMatrix cost(support, support);
    for (int a = 0; a < support; ++a) {
      for (int b = 0; b < support; ++b) cost(a, b) = transport::hamming(perms[a], perms[b]);
    }
    const auto w1 = random_weights(rng, support);
    const auto w2 = random_weights(rng, support);
    const auto w3 = random_weights(rng, support);
    const double d12 = transport::solve_ot(w1, w2, cost).cost;
    const double d23 = transport::solve_ot(w2, w3, cost).cost;
    const double d13 = transport::solve_ot(w1, w3, cost).cost;
    worst = std::max(worst, d13 - d12 - d23);
  }
  return finish(cfg, "ot_triangle_gluing", worst, tol::kMetricAxioms);
}

CheckResult check_hamming_metric_axioms(const RunConfig& cfg) {
  double worst = 0.0;
  for (int n : {3, 4}) {
    const auto perms = all_permutations(n);
    for (std::size_t a = 0; a < perms.size(); ++a) {
      worst = std::max(worst, transport::hamming(perms[a], perms[a]));
      for (std::size_t b = 0; b < perms.size(); ++b) {
        const double dab = transport::hamming(perms[a], perms[b]);
        worst = std::max(worst, std::abs(dab - transport::hamming(perms[b], perms[a])));
        if (a != b && dab <= 0.0) worst = std::max(worst, 1.0);
        for (std::size_t c = 0; c < perms.size(); ++c) {
          worst = std::max(worst, transport::hamming(perms[a], perms[c]) - dab -
                                      transport::hamming(perms[b], perms[c]));
        }
      }
    }
  }
  return finish(cfg, "hamming_metric_axioms", worst, 1e-12,
                "exhaustive over S_3 and S_4");
}

CheckResult check_hamming_never_one_over_n(const RunConfig& cfg) {
  int hits = 0;
  const auto perms = all_permutations(4);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      if (std::abs(transport::hamming(a, b) - 0.25) < 1e-12) ++hits;
    }
  }
  return finish(cfg, "hamming_never_one_over_n", static_cast<double>(hits), 0.0,
                "exhaustive S_4 pairs");
}

// ---------------------------------------------------------------------------
// distances properties

std::pair<StateMixture, StateMixture> random_pair(Rng& rng, const RunConfig&, int n) {
  return {corpus::random_mixture(rng, n, 2), corpus::random_mixture(rng, n, 2)};
}

CheckResult check_tensor_symmetry(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 18);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto [phi, psi] = random_pair(rng, cfg, n);
    const double forward = dist::distance_tensor(phi, psi, cfg).upper;
    const double backward = dist::distance_tensor(psi, phi, cfg).upper;
    worst = std::max(worst, std::abs(forward - backward));
  }
  return finish(cfg, "tensor_symmetry", worst, 1e-10);
}

CheckResult check_tensor_triangle(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 19);
  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_mixture(rng, n, 2);
    const auto chi = corpus::random_mixture(rng, n, 2);
    const auto psi = corpus::random_mixture(rng, n, 2);
    const double d12 = dist::distance_tensor(phi, chi, cfg).upper;
    const double d23 = dist::distance_tensor(chi, psi, cfg).upper;
    const double d13 = dist::distance_tensor(phi, psi, cfg).upper;
    worst = std::max(worst, d13 - d12 - d23);
  }
  return finish(cfg, "tensor_triangle", worst, tol::kMetricAxioms);
}

CheckResult check_cost_chain_pointwise(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 20);
  double worst = 0.0;
  int evaluated = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + (t % 4);
    const AtomicTrace a(corpus::random_representation(rng, n));
    const AtomicTrace b(corpus::random_representation(rng, n));
    if (static_cast<long long>(a.rep.d()) * b.rep.d() > cfg.dim_cap) continue;
    worst = std::max(worst, dist::atom_cost_l1(a, b, cfg.dim_cap) -
                                dist::atom_cost_hamming(a, b));
    ++evaluated;
  }
  if (evaluated == 0) {
    return skipped(cfg, "cost_chain_pointwise", tol::kCostChain,
                   "all pairs beyond dimension cap");
  }
  return finish(cfg, "cost_chain_pointwise", worst, tol::kCostChain,
                std::to_string(evaluated) + " atom pairs");
}

double report_chain_violation(const StateMixture& phi, const StateMixture& psi,
                              const RunConfig& cfg) {
  const auto tensor = dist::distance_tensor(phi, psi, cfg);
  const auto free_report = dist::distance_free(phi, psi, cfg);
  const auto l1 = dist::distance_l1(phi, psi, cfg);
  double violation = 0.0;
  for (const auto* rep : {&tensor, &free_report, &l1}) {
    violation = std::max({violation, -rep->lower, rep->lower - rep->upper,
                          rep->upper - 1.0 - 1e-9});
  }
  violation = std::max(violation, l1.lower - l1.upper);
  violation = std::max(violation, l1.upper - free_report.upper);
  violation = std::max(violation, free_report.upper - tensor.upper);
  return violation;
}

CheckResult check_report_chain(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 21);
  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto [phi, psi] = random_pair(rng, cfg, n);
    worst = std::max(worst, report_chain_violation(phi, psi, cfg));
  }
  return finish(cfg, "report_chain", worst, tol::kCostChain);
}

CheckResult check_self_distance_agreement(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 22);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_mixture(rng, n, 3);
    worst = std::max(worst, std::abs(dist::distance_tensor(phi, phi, cfg).upper -
                                     dist::self_distance_tensor(phi)));
  }
  const auto block = delta_two_block(rng);
  worst = std::max(worst, std::abs(dist::self_distance_tensor(block) - 0.5));
  std::vector<states::WeightedAtom> mixed = block.atoms();
  mixed[0].weight = 0.5;
  mixed.push_back({0.5, AtomicTrace(magic::from_permutation(4, {0, 1, 2, 3}))});
  const StateMixture half{std::move(mixed)};
  worst = std::max(worst, std::abs(dist::self_distance_tensor(half) - 0.25));
  return finish(cfg, "self_distance_agreement", worst, tol::kSelfDistance,
                "includes the 0.5 and 0.25 closed forms");
}

CheckResult check_self_distance_half_bound(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 23);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto [phi, psi] = random_pair(rng, cfg, n);
    const double upper = dist::distance_tensor(phi, psi, cfg).upper;
    const double bound = 0.5 * dist::self_distance_tensor(phi) +
                         0.5 * dist::self_distance_tensor(psi);
    worst = std::max(worst, bound - upper);
  }
  return finish(cfg, "self_distance_half_bound", worst, tol::kMetricAxioms);
}

double classical_recovery_worst(Rng& rng, const RunConfig& cfg, int pairs) {
  double worst = 0.0;
  for (int t = 0; t < pairs; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_classical_mixture(rng, n, 6);
    const auto psi = corpus::random_classical_mixture(rng, n, 6);
    transport::ClassicalMeasure m1;
    for (const auto& wa : phi.atoms()) {
      m1.perms.push_back(states::classical_permutation(wa.atom));
      m1.weights.push_back(wa.weight);
    }
    transport::ClassicalMeasure m2;
    for (const auto& wa : psi.atoms()) {
      m2.perms.push_back(states::classical_permutation(wa.atom));
      m2.weights.push_back(wa.weight);
    }
    const double w1 = transport::classical_w1(m1, m2);
    for (auto metric : {dist::Metric::kTensor, dist::Metric::kFree, dist::Metric::kL1}) {
      const auto report = dist::distance(metric, phi, psi, cfg);
      worst = std::max({worst, std::abs(report.upper - w1), std::abs(report.lower - w1)});
    }
  }
  return worst;
}

CheckResult check_classical_recovery(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 24);
  return finish(cfg, "classical_recovery", classical_recovery_worst(rng, cfg, 30),
                tol::kClassicalRecovery);
}

std::vector<std::pair<StateMixture, StateMixture>> disjoint_support_pairs(Rng& rng) {
  std::vector<std::pair<StateMixture, StateMixture>> pairs;
  pairs.emplace_back(states::delta_permutation(2, {0, 1}),
                     states::delta_permutation(2, {1, 0}));
  pairs.emplace_back(delta_two_block(rng), states::delta_permutation(4, {2, 3, 0, 1}));
  pairs.emplace_back(delta_two_block(rng),
                     states::delta(lifted_permutation(4, {2, 3, 0, 1})));
  std::vector<states::WeightedAtom> off_block;
  off_block.push_back({0.5, AtomicTrace(magic::from_permutation(4, {2, 3, 0, 1}))});
  off_block.push_back({0.5, AtomicTrace(magic::from_permutation(4, {3, 2, 1, 0}))});
  pairs.emplace_back(delta_two_block(rng), StateMixture{std::move(off_block)});
  return pairs;
}

double distance_one_forward_worst(Rng& rng, const RunConfig& cfg) {
  double worst = 0.0;
  for (const auto& [phi, psi] : disjoint_support_pairs(rng)) {
    if (!dist::check_distance_one(phi, psi)) {
      worst = std::max(worst, 1.0);
      continue;
    }
    for (auto metric : {dist::Metric::kTensor, dist::Metric::kFree, dist::Metric::kL1}) {
      const auto report = dist::distance(metric, phi, psi, cfg);
      worst = std::max({worst, std::abs(report.upper - 1.0), std::abs(report.lower - 1.0)});
    }
  }
  return worst;
}

CheckResult check_distance_one_forward(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 25);
  return finish(cfg, "distance_one_forward", distance_one_forward_worst(rng, cfg),
                tol::kDistanceOne);
}

double distance_one_converse_worst(Rng& rng, const RunConfig& cfg, int pairs,
                                   int* triggered_out) {
  double worst = 0.0;
  int triggered = 0;
  auto probe = [&](const StateMixture& phi, const StateMixture& psi) {
    const auto report = dist::distance_tensor(phi, psi, cfg);
    if (report.upper >= 1.0 - 1e-9) {
      ++triggered;
      const double inner =
          states::birkhoff(phi).cwiseProduct(states::birkhoff(psi)).sum();
      worst = std::max(worst, inner);
    }
  };
  for (const auto& [phi, psi] : disjoint_support_pairs(rng)) probe(phi, psi);
  for (int t = 0; t < pairs; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto [phi, psi] = random_pair(rng, cfg, n);
    probe(phi, psi);
  }
  if (triggered_out != nullptr) *triggered_out = triggered;
  return worst;
}

CheckResult check_distance_one_converse(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 26);
  int triggered = 0;
  const double worst = distance_one_converse_worst(rng, cfg, 30, &triggered);
  return finish(cfg, "distance_one_converse", worst, 1e-8,
                std::to_string(triggered) + " pairs at upper = 1");
}

struct OperatorWorst {
  double psd = 0.0;
  double triangle = 0.0;
  double comult = 0.0;
  int evaluated = 0;
  int skipped_tuples = 0;
};

OperatorWorst operator_certificates(Rng& rng, const RunConfig& cfg, int tuples) {
  OperatorWorst out;
  const int sizes[] = {2, 3, 4, 5};
  for (int t = 0; t < tuples; ++t) {
    const int n = sizes[t % 4];
    const auto a = corpus::random_representation(rng, n);
    const auto b = corpus::random_representation(rng, n);
    const auto c = corpus::random_representation(rng, n);
    const auto e = corpus::random_representation(rng, n);
    try {
      out.psd = std::max(out.psd, -dist::build_cost_operator(a, b, cfg.dim_cap).min_eig);
      out.triangle =
          std::max(out.triangle, -dist::check_triangle_operator(a, b, c, cfg.dim_cap));
      out.comult = std::max(
          out.comult, -dist::check_comult_inequality(a, b, c, e, cfg.dim_cap));
      ++out.evaluated;
    } catch (const DimensionOverflow&) {
      ++out.skipped_tuples;
    }
  }
  return out;
}

CheckResult check_operator_psd(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 27);
  const auto worst = operator_certificates(rng, cfg, 20);
  if (worst.evaluated == 0) {
    return skipped(cfg, "operator_psd", tol::kOperatorPsd,
                   "all tuples beyond dimension cap");
  }
  return finish(cfg, "operator_psd", worst.psd, tol::kOperatorPsd,
                std::to_string(worst.evaluated) + " tuples, " +
                    std::to_string(worst.skipped_tuples) + " beyond cap");
}

CheckResult check_triangle_operator_suite(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 27);  // same tuples as operator_psd
  const auto worst = operator_certificates(rng, cfg, 20);
  if (worst.evaluated == 0) {
    return skipped(cfg, "triangle_operator", tol::kOperatorPsd,
                   "all tuples beyond dimension cap");
  }
  return finish(cfg, "triangle_operator", worst.triangle, tol::kOperatorPsd,
                std::to_string(worst.evaluated) + " tuples, " +
                    std::to_string(worst.skipped_tuples) + " beyond cap");
}

CheckResult check_comult_inequality_suite(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 27);
  const auto worst = operator_certificates(rng, cfg, 20);
  if (worst.evaluated == 0) {
    return skipped(cfg, "comult_inequality", tol::kOperatorPsd,
                   "all tuples beyond dimension cap");
  }
  return finish(cfg, "comult_inequality", worst.comult, tol::kOperatorPsd,
                std::to_string(worst.evaluated) + " tuples, " +
                    std::to_string(worst.skipped_tuples) + " beyond cap");
}

CheckResult check_word_bound_consistency(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 28);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto [phi, psi] = random_pair(rng, cfg, n);
    const double words = dist::lower_bound_words(phi, psi, cfg);
    const double upper = dist::distance_l1(phi, psi, cfg).upper;
    worst = std::max(worst, words - upper);
  }
  return finish(cfg, "word_bound_consistency", worst, tol::kWordBound);
}

CheckResult check_birkhoff_gap(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 29);
  double worst = 0.0;
  for (int t = 0; t < 25; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto [phi, psi] = random_pair(rng, cfg, n);
    const auto gap = dist::birkhoff_gap_identity(phi, psi, cfg);
    worst = std::max(worst, std::abs(gap.lhs - gap.rhs));
  }
  const auto hand = dist::birkhoff_gap_identity(
      states::delta_permutation(4, {0, 1, 2, 3}), delta_two_block(rng), cfg);
  worst = std::max({worst, std::abs(hand.lhs - 0.25), std::abs(hand.rhs - 0.25)});
  return finish(cfg, "birkhoff_gap_identity", worst, tol::kBirkhoffGap,
                "includes the 0.25 closed form");
}

CheckResult check_convolution_subadditivity_suite(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 30);
  double worst = 0.0;
  int evaluated = 0;
  int beyond_cap = 0;
  for (int t = 0; t < 6; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi1 = corpus::random_mixture(rng, n, 2);
    const auto phi2 = corpus::random_mixture(rng, n, 2);
    const auto psi1 = corpus::random_mixture(rng, n, 2);
    const auto psi2 = corpus::random_mixture(rng, n, 2);
    for (auto metric : {dist::Metric::kTensor, dist::Metric::kFree, dist::Metric::kL1}) {
      try {
        const auto sub =
            dist::check_convolution_subadditivity(phi1, phi2, psi1, psi2, metric, cfg);
        worst = std::max(worst, sub.lhs - sub.rhs);
        ++evaluated;
      } catch (const DimensionOverflow&) {
        ++beyond_cap;
      }
    }
  }
  if (evaluated == 0) {
    return skipped(cfg, "convolution_subadditivity", tol::kSubadditivity,
                   "all quadruples beyond dimension cap");
  }
  return finish(cfg, "convolution_subadditivity", worst, tol::kSubadditivity,
                std::to_string(evaluated) + " runs, " + std::to_string(beyond_cap) +
                    " beyond cap");
}

CheckResult check_tv_dominates_free_classical(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 31);
  double worst = 0.0;
  for (int t = 0; t < 15; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const auto phi = corpus::random_classical_mixture(rng, n, 4);
    const auto psi = corpus::random_classical_mixture(rng, n, 4);
    const double tv = dist::tv_upper_bound_classical(phi, psi);
    const double upper = dist::distance_free(phi, psi, cfg).upper;
    worst = std::max(worst, upper - tv);
  }
  std::vector<states::WeightedAtom> half;
  half.push_back({0.5, AtomicTrace(magic::from_permutation(3, {0, 1, 2}))});
  half.push_back({0.5, AtomicTrace(magic::from_permutation(3, {1, 0, 2}))});
  const StateMixture mixed{std::move(half)};
  const auto identity = states::delta_permutation(3, {0, 1, 2});
  worst = std::max(worst,
                   std::abs(dist::tv_upper_bound_classical(mixed, identity) - 0.5));
  return finish(cfg, "tv_dominates_free_classical", worst, tol::kClassicalRecovery,
                "includes the S_3 half-mixture value 0.5");
}

CheckResult check_optimize_unitary_realign(const RunConfig& cfg) {
  Rng rng = check_rng(cfg, 32);
  double worst = 0.0;
  for (int t = 0; t < 6; ++t) {
    // Two-block grids and sums of two distinct classical grids both have
    // non-scalar cells, so conjugation genuinely moves them.
    magic::MagicUnitary base =
        (t % 2 == 0)
            ? magic::two_block(corpus::random_projection(rng, 2, 1),
                               corpus::random_projection(rng, 2, 1))
            : magic::direct_sum(
                  magic::from_permutation(3, corpus::random_permutation(rng, 3)),
                  magic::from_permutation(3, corpus::random_permutation(rng, 3)));
    const Matrix v = corpus::haar_unitary(rng, 2);
    const AtomicTrace a(base);
    const AtomicTrace b(magic::conjugate(base, v));
    const auto search = dist::optimize_unitary(a, b, cfg.unitary_restarts,
                                               cfg.unitary_steps, rng.raw());
    worst = std::max(worst, search.cost);
  }
  return finish(cfg, "optimize_unitary_realign", worst, tol::kRealignTarget);
}

}  // namespace

std::vector<CheckResult> run_suite(const RunConfig& config) {
  std::vector<CheckResult> results;
  results.push_back(check_meet_commutative(config));
  results.push_back(check_meet_idempotent(config));
  results.push_back(check_meet_associative(config));
  results.push_back(check_trace_identity(config));
  results.push_back(check_meet_iterate_agreement(config));
  results.push_back(check_tensor_versus_min(config));
  results.push_back(check_min_versus_sum(config));
  results.push_back(check_powers_stormer(config));
  results.push_back(check_kron_trace_multiplicative(config));
  results.push_back(check_convolve_coassociative(config));
  results.push_back(check_convolve_classical_exact(config));
  results.push_back(check_row_orthogonality(config));
  results.push_back(check_validate_corpus(config));
  results.push_back(check_birkhoff_intertwines_convolution(config));
  results.push_back(check_word_conjugation_invariant(config));
  results.push_back(check_classical_word_expectation(config));
  results.push_back(check_ot_oracle_agreement(config));
  results.push_back(check_ot_triangle_gluing(config));
  results.push_back(check_hamming_metric_axioms(config));
  results.push_back(check_hamming_never_one_over_n(config));
  results.push_back(check_tensor_symmetry(config));
  results.push_back(check_tensor_triangle(config));
  results.push_back(check_cost_chain_pointwise(config));
  results.push_back(check_report_chain(config));
  results.push_back(check_self_distance_agreement(config));
  results.push_back(check_self_distance_half_bound(config));
  results.push_back(check_classical_recovery(config));
  results.push_back(check_distance_one_forward(config));
  results.push_back(check_distance_one_converse(config));
  results.push_back(check_operator_psd(config));
  results.push_back(check_triangle_operator_suite(config));
  results.push_back(check_comult_inequality_suite(config));
  results.push_back(check_word_bound_consistency(config));
  results.push_back(check_birkhoff_gap(config));
  results.push_back(check_convolution_subadditivity_suite(config));
  results.push_back(check_tv_dominates_free_classical(config));
  results.push_back(check_optimize_unitary_realign(config));
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.skipped && !r.pass) return false;
  }
  return true;
}

std::string results_to_json(const std::vector<CheckResult>& results,
                            const RunConfig& config) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : results) {
    items.push_back(nlohmann::json{{"name", r.name},
                                   {"pass", r.pass},
                                   {"skipped", r.skipped},
                                   {"worst", r.worst},
                                   {"tol", r.tol},
                                   {"detail", r.detail}});
  }
  return nlohmann::json{{"seed", config.seed},
                        {"dim_cap", config.dim_cap},
                        {"results", std::move(items)}}
      .dump(2);
}

std::string results_to_csv(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  out.precision(17);
  out << "name,pass,skipped,worst,tol\n";
  for (const auto& r : results) {
    out << r.name << "," << (r.pass ? 1 : 0) << "," << (r.skipped ? 1 : 0) << ","
        << r.worst << "," << r.tol << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// acceptance criteria

namespace {

CriterionResult timed(int index, std::string name, double limit_seconds,
                      const std::function<std::pair<bool, std::string>()>& body) {
  CriterionResult r;
  r.index = index;
  r.name = std::move(name);
  const double start = now_seconds();
  auto [ok, detail] = body();
  r.seconds = now_seconds() - start;
  r.detail = std::move(detail);
  r.pass = ok && (limit_seconds <= 0.0 || r.seconds < limit_seconds);
  if (ok && limit_seconds > 0.0 && r.seconds >= limit_seconds) {
    r.detail += (r.detail.empty() ? "" : "; ");
    r.detail += "over time budget";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const RunConfig& config) {
  std::vector<CriterionResult> out;

  out.push_back(timed(1, "classical_recovery", 5.0, [&]() {
    Rng rng = check_rng(config, 101);
    const double worst = classical_recovery_worst(rng, config, 100);
    return std::make_pair(worst <= tol::kClassicalRecovery,
                          "worst deviation " + brief(worst) + " over 100 pairs");
  }));

  out.push_back(timed(2, "ot_oracle", 5.0, [&]() {
    Rng rng = check_rng(config, 102);
    const double worst = ot_oracle_worst(rng, 500);
    return std::make_pair(worst <= tol::kOtOracle,
                          "worst gap " + brief(worst) + " over 500 instances");
  }));

  out.push_back(timed(3, "operator_certificates", 60.0, [&]() {
    Rng rng = check_rng(config, 103);
    const auto worst = operator_certificates(rng, config, 52);
    const double residual = std::max({worst.psd, worst.triangle, worst.comult});
    std::ostringstream detail;
    detail << worst.evaluated << " tuples; worst psd " << brief(worst.psd)
           << ", triangle " << brief(worst.triangle) << ", comult "
           << brief(worst.comult);
    return std::make_pair(worst.evaluated >= 50 && residual <= tol::kOperatorPsd,
                          detail.str());
  }));

  out.push_back(timed(4, "projection_lattice", 10.0, [&]() {
    Rng rng = check_rng(config, 104);
    double worst_identity = 0.0;
    double worst_ps = 0.0;
    for (int t = 0; t < 200; ++t) {
      const int d = rng.uniform_int(2, 8);
      ProjectionMatrix p = generic_projection(rng, d);
      ProjectionMatrix q = generic_projection(rng, d);
      if (t % 3 == 0 && d >= 3) {
        auto pair = frame_projections(rng, d, 2, rng.uniform_int(2, d - 1));
        p = pair[0];
        q = pair[1];
      }
      const double lhs = linalg::normalized_trace(linalg::join(p, q).hermitian()) +
                         linalg::normalized_trace(linalg::meet(p, q).hermitian());
      const double rhs = linalg::normalized_trace(p.hermitian()) +
                         linalg::normalized_trace(q.hermitian());
      worst_identity = std::max(worst_identity, std::abs(lhs - rhs));
      const Matrix diff = p.mat() - q.mat();
      const double hs2 = (diff.adjoint() * diff).trace().real() / d;
      worst_ps = std::max(worst_ps, hs2 - linalg::trace_norm(linalg::HermitianMatrix(diff)));
    }
    double worst_tensor = 0.0;
    double worst_minsum = 0.0;
    for (int t = 0; t < 50; ++t) {
      {
        const int db = rng.uniform_int(2, 4);
        auto lp = (t % 2 == 0)
                      ? frame_projections(rng, 2, 2, 1)
                      : std::vector<ProjectionMatrix>{generic_projection(rng, 2),
                                                      generic_projection(rng, 2)};
        auto rp = (t % 2 == 0)
                      ? frame_projections(rng, db, 2, rng.uniform_int(1, db - 1))
                      : std::vector<ProjectionMatrix>{generic_projection(rng, db),
                                                      generic_projection(rng, db)};
        const ProjectionMatrix lhs = linalg::meet(
            ProjectionMatrix(linalg::kron(lp[0].mat(), rp[0].mat())),
            ProjectionMatrix(linalg::kron(lp[1].mat(), rp[1].mat())));
        const Matrix rhs = linalg::kron(linalg::meet(lp[0], lp[1]).mat(),
                                        linalg::meet(rp[0], rp[1]).mat());
        worst_tensor = std::max(worst_tensor, linalg::max_abs(lhs.mat() - rhs));
      }
      {
        const int d = rng.uniform_int(3, 8);
        const int parts = rng.uniform_int(1, std::min(3, d));
        const auto ps = corpus::random_orthogonal_family(rng, d, parts);
        const auto qs = corpus::random_orthogonal_family(rng, d, parts);
        Matrix sp = Matrix::Zero(d, d);
        Matrix sq = Matrix::Zero(d, d);
        Matrix sm = Matrix::Zero(d, d);
        for (int i = 0; i < parts; ++i) {
          sp += ps[i].mat();
          sq += qs[i].mat();
          sm += linalg::meet(ps[i], qs[i]).mat();
        }
        const double value = linalg::min_eigenvalue(linalg::HermitianMatrix(
            linalg::meet(ProjectionMatrix(sp), ProjectionMatrix(sq)).mat() - sm));
        worst_minsum = std::max(worst_minsum, -value);
      }
    }
    const bool ok = worst_identity <= tol::kTraceIdentity &&
                    worst_tensor <= tol::kMeetAgreement &&
                    worst_minsum <= tol::kMinVersusSum && worst_ps <= tol::kPowersStormer;
    std::ostringstream detail;
    detail << "trace identity " << brief(worst_identity) << ", tensor-vs-min "
           << brief(worst_tensor) << ", min-vs-sum " << brief(worst_minsum)
           << ", Powers-Stormer " << brief(worst_ps);
    return std::make_pair(ok, detail.str());
  }));

  out.push_back(timed(5, "tensor_metric_axioms", 30.0, [&]() {
    Rng rng = check_rng(config, 105);
    double worst_sym = 0.0;
    double worst_tri = 0.0;
    for (int t = 0; t < 100; ++t) {
      const int n = (t % 2 == 0) ? 3 : 4;
      const auto phi = corpus::random_mixture(rng, n, 2);
      const auto chi = corpus::random_mixture(rng, n, 2);
      const auto psi = corpus::random_mixture(rng, n, 2);
      const double d12 = dist::distance_tensor(phi, chi, config).upper;
      const double d21 = dist::distance_tensor(chi, phi, config).upper;
      const double d23 = dist::distance_tensor(chi, psi, config).upper;
      const double d13 = dist::distance_tensor(phi, psi, config).upper;
      worst_sym = std::max(worst_sym, std::abs(d12 - d21));
      worst_tri = std::max(worst_tri, d13 - d12 - d23);
    }
    double worst_self = 0.0;
    for (int t = 0; t < 30; ++t) {
      const int n = (t % 2 == 0) ? 3 : 4;
      const auto phi = corpus::random_mixture(rng, n, 3);
      worst_self = std::max(worst_self,
                            std::abs(dist::distance_tensor(phi, phi, config).upper -
                                     dist::self_distance_tensor(phi)));
    }
    const auto block = delta_two_block(rng);
    worst_self = std::max(worst_self, std::abs(dist::self_distance_tensor(block) - 0.5));
    std::vector<states::WeightedAtom> mixed = block.atoms();
    mixed[0].weight = 0.5;
    mixed.push_back({0.5, AtomicTrace(magic::from_permutation(4, {0, 1, 2, 3}))});
    worst_self = std::max(
        worst_self, std::abs(dist::self_distance_tensor(StateMixture{std::move(mixed)}) - 0.25));
    const bool ok = worst_sym <= tol::kMetricAxioms && worst_tri <= tol::kMetricAxioms &&
                    worst_self <= tol::kSelfDistance;
    std::ostringstream detail;
    detail << "symmetry " << brief(worst_sym) << ", triangle " << brief(worst_tri)
           << ", self-distance " << brief(worst_self);
    return std::make_pair(ok, detail.str());
  }));

  out.push_back(timed(6, "birkhoff_gap", 30.0, [&]() {
    Rng rng = check_rng(config, 106);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const int n = (t % 2 == 0) ? 3 : 4;
      const auto phi = corpus::random_mixture(rng, n, 2);
      const auto psi = corpus::random_mixture(rng, n, 2);
      const auto gap = dist::birkhoff_gap_identity(phi, psi, config);
      worst = std::max(worst, std::abs(gap.lhs - gap.rhs));
    }
    const auto hand = dist::birkhoff_gap_identity(
        states::delta_permutation(4, {0, 1, 2, 3}), delta_two_block(rng), config);
    worst = std::max({worst, std::abs(hand.lhs - 0.25), std::abs(hand.rhs - 0.25)});
    return std::make_pair(worst <= tol::kBirkhoffGap,
                          "worst gap " + brief(worst) + ", closed form included");
  }));

  out.push_back(timed(7, "comparison_chain", 30.0, [&]() {
    Rng rng = check_rng(config, 107);
    double worst_cost = 0.0;
    int cost_pairs = 0;
    for (int t = 0; t < 60; ++t) {
      const int n = 2 + (t % 4);
      const AtomicTrace a(corpus::random_representation(rng, n));
      const AtomicTrace b(corpus::random_representation(rng, n));
      if (static_cast<long long>(a.rep.d()) * b.rep.d() > config.dim_cap) continue;
      worst_cost = std::max(worst_cost, dist::atom_cost_l1(a, b, config.dim_cap) -
                                            dist::atom_cost_hamming(a, b));
      ++cost_pairs;
    }
    double worst_chain = 0.0;
    for (int t = 0; t < 100; ++t) {
      const int n = (t % 2 == 0) ? 3 : 4;
      const auto [phi, psi] = random_pair(rng, config, n);
      worst_chain = std::max(worst_chain, report_chain_violation(phi, psi, config));
    }
    const double worst_forward = distance_one_forward_worst(rng, config);
    int triggered = 0;
    const double worst_converse =
        distance_one_converse_worst(rng, config, 100, &triggered);
    const bool ok = worst_cost <= tol::kCostChain && worst_chain <= tol::kCostChain &&
                    worst_forward <= tol::kDistanceOne && worst_converse <= 1e-8;
    std::ostringstream detail;
    detail << "pointwise " << brief(worst_cost) << " (" << cost_pairs
           << " pairs), chain " << brief(worst_chain) << ", distance-one forward "
           << brief(worst_forward) << ", converse " << brief(worst_converse) << " ("
           << triggered << " triggers)";
    return std::make_pair(ok, detail.str());
  }));

  out.push_back(timed(8, "convolution", 60.0, [&]() {
    double worst_exact = 0.0;
    const auto s3 = all_permutations(3);
    for (const auto& sigma : s3) {
      for (const auto& sigma2 : s3) {
        const auto conv = magic::convolve(magic::from_permutation(3, sigma),
                                          magic::from_permutation(3, sigma2));
        const auto expected = magic::from_permutation(3, compose(sigma, sigma2));
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            worst_exact = std::max(worst_exact,
                                   linalg::max_abs(conv.cell(i, j).mat() -
                                                   expected.cell(i, j).mat()));
          }
        }
      }
    }
    Rng rng = check_rng(config, 108);
    double worst_sub = 0.0;
    int evaluated = 0;
    for (int t = 0; t < 25; ++t) {
      const int n = (t % 2 == 0) ? 3 : 4;
      const auto phi1 = corpus::random_mixture(rng, n, 2);
      const auto phi2 = corpus::random_mixture(rng, n, 2);
      const auto psi1 = corpus::random_mixture(rng, n, 2);
      const auto psi2 = corpus::random_mixture(rng, n, 2);
      for (auto metric :
           {dist::Metric::kTensor, dist::Metric::kFree, dist::Metric::kL1}) {
        try {
          const auto sub = dist::check_convolution_subadditivity(phi1, phi2, psi1, psi2,
                                                                 metric, config);
          worst_sub = std::max(worst_sub, sub.lhs - sub.rhs);
          ++evaluated;
        } catch (const DimensionOverflow&) {
        }
      }
    }
    const bool ok = worst_exact <= 0.0 && worst_sub <= tol::kSubadditivity && evaluated > 0;
    std::ostringstream detail;
    detail << "S_3 composition exact, subadditivity slack " << brief(worst_sub) << " over "
           << evaluated << " runs";
    return std::make_pair(ok, detail.str());
  }));

  out.push_back(timed(9, "word_bound", 10.0, [&]() {
    Rng rng = check_rng(config, 109);
    double worst = 0.0;
    for (int t = 0; t < 40; ++t) {
      const int n = (t % 2 == 0) ? 3 : 4;
      const auto [phi, psi] = random_pair(rng, config, n);
      const double words = dist::lower_bound_words(phi, psi, config);
      const double upper = dist::distance_l1(phi, psi, config).upper;
      worst = std::max(worst, words - upper);
    }
    const auto left = states::delta_permutation(2, {0, 1});
    const auto right = states::delta_permutation(2, {1, 0});
    const double hand = dist::lower_bound_words(left, right, config);
    const double hand_upper = dist::distance_l1(left, right, config).upper;
    const bool hand_ok = std::abs(hand - 0.25) <= 1e-12 && hand <= hand_upper + tol::kWordBound;
    return std::make_pair(worst <= tol::kWordBound && hand_ok,
                          "worst slack " + brief(worst) + "; S_2 hand bound " + brief(hand));
  }));

  out.push_back(timed(10, "determinism", 0.0, [&]() {
    const std::string first = results_to_json(run_suite(config), config);
    const std::string second = results_to_json(run_suite(config), config);
    return std::make_pair(first == second,
                          first == second ? "suite reports byte-identical"
                                          : "suite reports differ between runs");
  }));

  return out;
}

}  // namespace qham::suite
