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

#ifndef QHAM_DISTANCES_HPP
#define QHAM_DISTANCES_HPP

#include <string>
#include <vector>

#include "qham/states.hpp"
#include "qham/transport.hpp"

namespace qham::dist {

enum class Metric { kTensor, kFree, kL1 };

std::string metric_name(Metric metric);

// Sandwich estimate for one metric. The upper bound is always realized by an
// explicit coupling construction (plan-weighted combination of diagonal,
// tensor-embedding, and same-dimension unitary couplings); the lower bound by
// the word inequality, the disjoint-support criterion, or classical recovery.
// For the tensor metric the upper value is exact relative to the presented
// atoms; for the other two, exact only when the sandwich closes.
struct DistanceReport {
  Metric metric = Metric::kTensor;
  double upper = 0.0;
  double lower = 0.0;
  bool exact_for_presented_atoms = false;
  linalg::RealMatrix plan;                     // over deduped atom indices
  std::vector<std::string> witnesses;
};

// 1 − (1/n)·Σ_ij ω_a[i][j]·ω_b[i][j] — the tensor-embedding coupling cost.
// On classical atoms this is the normalized mismatch count.
double atom_cost_hamming(const states::AtomicTrace& a, const states::AtomicTrace& b);

// (1/2n)·Σ_ij ‖P_ij ⊗ 1 − 1 ⊗ Q_ij‖ in the normalized trace norm on the
// Kronecker product space.
double atom_cost_l1(const states::AtomicTrace& a, const states::AtomicTrace& b,
                    int dim_cap = kDefaultDimCap);

// Same coupling evaluated in the L¹ norm on a common space: (1/2n)·Σ_ij
// ‖P_ij − u·Q_ij·u†‖. Requires equal dimensions.
double atom_cost_l1_same_dim(const states::AtomicTrace& a, const states::AtomicTrace& b,
                             const linalg::Matrix& u);

// 1 − (1/n)·Σ_ij tr(P_ij ∧ u·Q_ij·u†) — same-space coupling through the
// projection lattice. Requires equal dimensions.
double atom_cost_meet_same_dim(const states::AtomicTrace& a, const states::AtomicTrace& b,
                               const linalg::Matrix& u);

struct UnitarySearch {
  linalg::Matrix u;
  double cost = 0.0;                 // meet cost at u, ≤ cost at identity
  bool improved_over_identity = false;
};

// Best same-dimension meet cost found over the identity and seeded runs of
// random-axis geodesic descent. The meet cost is flat wherever ranges are in
// general position, so the descent runs on the smooth product surrogate
// 1 − (1/n)Σ tr(P_ij·uQ_iju†) and the meet cost is scored at the visited
// candidates; the returned value is the best meet cost seen.
UnitarySearch optimize_unitary(const states::AtomicTrace& a, const states::AtomicTrace& b,
                               int restarts, int steps, std::uint64_t seed);

// Lipschitz lower bound: max over the word corpus of
// |φ(w) − ψ(w)| / (2·n·len(w)).
double lower_bound_words(const states::StateMixture& phi, const states::StateMixture& psi,
                         const RunConfig& config);

// 1 − (1/n)·Σ_a w_a Σ_ij ω_a[i][j]² — the closed form of the tensor
// self-distance (diagonal plans are optimal against oneself).
double self_distance_tensor(const states::StateMixture& phi);

// True iff Σ_ij birkhoff(φ)·birkhoff(ψ) ≤ 1e-10; then every metric is
// exactly 1 between the two mixtures.
bool check_distance_one(const states::StateMixture& phi, const states::StateMixture& psi);

DistanceReport distance(Metric metric, const states::StateMixture& phi,
                        const states::StateMixture& psi, const RunConfig& config);

DistanceReport distance_tensor(const states::StateMixture& phi,
                               const states::StateMixture& psi, const RunConfig& config);
DistanceReport distance_free(const states::StateMixture& phi,
                             const states::StateMixture& psi, const RunConfig& config);
DistanceReport distance_l1(const states::StateMixture& phi, const states::StateMixture& psi,
                           const RunConfig& config);

// Tensor distance shifted by the self-distances against half the squared
// 2-Wasserstein distance of the pushed-forward measures on bistochastic
// matrices; the two sides agree as an LP identity.
struct BirkhoffGap {
  double lhs = 0.0;
  double rhs = 0.0;
};
BirkhoffGap birkhoff_gap_identity(const states::StateMixture& phi,
                                  const states::StateMixture& psi, const RunConfig& config);

// The cost operator 1 − (1/n)·Σ_ij a(i,j) ⊗ b(i,j) realized on the Kronecker
// product of the two representations. Positive semidefinite.
struct CostOperatorRep {
  linalg::HermitianMatrix matrix;
  double min_eig = 0.0;
};
CostOperatorRep build_cost_operator(const magic::MagicUnitary& a, const magic::MagicUnitary& b,
                                    int dim_cap = kDefaultDimCap);

// Operator triangle inequality, certified per row: min over rows i of
// min_eig((1−p12) + (1−p23) − (1−p13)) with p12 = Σ_j a(i,j)⊗b(i,j)⊗1 etc.
// Nonnegative up to tolerance.
double check_triangle_operator(const magic::MagicUnitary& a, const magic::MagicUnitary& b,
                               const magic::MagicUnitary& c, int dim_cap = kDefaultDimCap);

// Subadditivity at the operator level on a four-fold product: min_eig of
// ι12(C) + ι34(C) − C̃ where C̃ = 1 − (1/n)Σ_{ijkl} a(i,k)⊗b(i,l)⊗c(k,j)⊗e(l,j).
// Nonnegative up to tolerance.
double check_comult_inequality(const magic::MagicUnitary& a, const magic::MagicUnitary& b,
                               const magic::MagicUnitary& c, const magic::MagicUnitary& e,
                               int dim_cap = kDefaultDimCap);

// lhs = upper bound for d(φ1∗ψ1, φ2∗ψ2), computed with the product coupling
// induced by the two pairwise tables so that lhs ≤ rhs holds at the
// estimator level; rhs = sum of the two pairwise upper bounds.
struct Subadditivity {
  double lhs = 0.0;
  double rhs = 0.0;
};
Subadditivity check_convolution_subadditivity(const states::StateMixture& phi1,
                                              const states::StateMixture& phi2,
                                              const states::StateMixture& psi1,
                                              const states::StateMixture& psi2,
                                              Metric metric, const RunConfig& config);

// ½·Σ_σ |μ1(σ) − μ2(σ)| for classical mixtures; dominates the free upper
// bound there.
double tv_upper_bound_classical(const states::StateMixture& phi,
                                const states::StateMixture& psi);

}  // namespace qham::dist

#endif  // QHAM_DISTANCES_HPP
