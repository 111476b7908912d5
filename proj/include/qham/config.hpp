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

#ifndef QHAM_CONFIG_HPP
#define QHAM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

namespace qham {

// Pinned numerical tolerances. Values in this library live in [0,1] (traces,
// normalized norms, distances), so every tolerance is absolute.
namespace tol {
inline constexpr double kHermiticity = 1e-10;       // max |m - m†| entry
inline constexpr double kProjection = 1e-8;         // max |P² - P| entry
inline constexpr double kMagicSums = 1e-8;          // row/col sums vs identity
inline constexpr double kRowOrthogonality = 1e-7;   // |u_ij u_ij'| within a row
inline constexpr double kMeetAgreement = 1e-7;      // meet vs algebraic identities
inline constexpr double kTraceIdentity = 1e-8;      // τ(p∨q)+τ(p∧q) vs τ(p)+τ(q)
inline constexpr double kIterateMaxNorm = 1e-4;     // meet vs (pqp)^256, entrywise
inline constexpr double kIterateTrace = 1e-6;       // meet vs (pqp)^256, traces
inline constexpr double kMinVersusSum = 1e-8;       // one-sided eigenvalue slack
inline constexpr double kPowersStormer = 1e-9;
inline constexpr double kOtOracle = 1e-9;           // simplex vs brute force
inline constexpr double kOtCertificate = 1e-9;      // complementary slackness
inline constexpr double kWeightSum = 1e-10;         // mixture weights vs 1
inline constexpr double kAtomDrop = 1e-12;          // weight below which atoms vanish
inline constexpr double kAtomIdentity = 1e-10;      // grid equality for dedupe
inline constexpr double kBistochastic = 1e-8;
inline constexpr double kIntertwine = 1e-9;         // birkhoff ∘ convolve vs product
inline constexpr double kWordImaginary = 1e-9;
inline constexpr double kOperatorPsd = 1e-9;        // one-sided: min eig ≥ -kOperatorPsd
inline constexpr double kCostChain = 1e-9;
inline constexpr double kSelfDistance = 1e-9;
inline constexpr double kMetricAxioms = 1e-8;
inline constexpr double kClassicalRecovery = 1e-8;
inline constexpr double kBirkhoffGap = 1e-8;
inline constexpr double kSubadditivity = 1e-8;
inline constexpr double kWordBound = 1e-8;
inline constexpr double kDistanceOne = 1e-9;
inline constexpr double kFileWeightSum = 1e-8;      // looser: file inputs
inline constexpr double kRealignTarget = 1e-6;      // unitary search recovery
}  // namespace tol

inline constexpr int kDefaultDimCap = 4096;

// Knobs shared by the distance estimators, the generated corpora, and the CLI.
struct RunConfig {
  std::uint64_t seed = 20260101;
  int dim_cap = kDefaultDimCap;
  int word_max_len = 3;        // exhaustive through length 2, sampled beyond
  int word_sample_count = 200; // per sampled length, n ≥ 4 only
  int unitary_restarts = 8;
  int unitary_steps = 200;
  std::map<std::string, double> tolerance_overrides;

  double tolerance(const std::string& name, double fallback) const {
    auto it = tolerance_overrides.find(name);
    return it == tolerance_overrides.end() ? fallback : it->second;
  }
};

}  // namespace qham

#endif  // QHAM_CONFIG_HPP
