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

#ifndef QHAM_STATES_HPP
#define QHAM_STATES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qham/magic.hpp"

namespace qham::states {

// A representation together with its trace table ω[i][j] = tr_d(cell(i,j)).
// ω is bistochastic: the grid sum relations push forward through the trace.
struct AtomicTrace {
  magic::MagicUnitary rep;
  linalg::RealMatrix omega;

  explicit AtomicTrace(magic::MagicUnitary r);
};

struct WeightedAtom {
  double weight;
  AtomicTrace atom;
};

// Convex combination of atomic traces over a common n. Weights are
// nonnegative and sum to 1 within tol::kWeightSum once normalized.
class StateMixture {
 public:
  explicit StateMixture(std::vector<WeightedAtom> atoms);

  int n() const { return n_; }
  std::size_t size() const { return atoms_.size(); }
  const WeightedAtom& at(std::size_t idx) const;
  const std::vector<WeightedAtom>& atoms() const { return atoms_; }

 private:
  int n_;
  std::vector<WeightedAtom> atoms_;
};

// Point mass at a single atom.
StateMixture delta(magic::MagicUnitary rep);
StateMixture delta_permutation(int n, const std::vector<int>& sigma);

// Rescales weights to sum 1 and drops atoms below tol::kAtomDrop.
StateMixture normalize(const StateMixture& phi);

// Merges atoms whose grids agree entrywise within tol::kAtomIdentity
// (weights add). Unitary equivalence is deliberately not detected.
StateMixture dedupe(const StateMixture& phi);

// Monomial in the generators: letters (i,j), 0-based.
using Word = std::vector<std::pair<int, int>>;

// Σ_a w_a · tr(Π_t cell(i_t, j_t)). The imaginary part must vanish within
// tol::kWordImaginary; the empty word evaluates to 1.
double evaluate_word(const StateMixture& phi, const Word& w);

// Σ_a w_a · ω_a — the bistochastic image of the mixture.
linalg::RealMatrix birkhoff(const StateMixture& phi);

// All atom pairs, weights multiplied, representations convolved. Atom order
// is a-major: pair (a_idx, b_idx) lands at index a_idx·psi.size() + b_idx.
StateMixture convolve_states(const StateMixture& phi, const StateMixture& psi,
                             int dim_cap = kDefaultDimCap);

// True iff every atom factors through a point mass on a permutation: ω
// entries 0/1 within tol::kMagicSums and cells scalar multiples of the
// identity within the same tolerance.
bool is_classical(const StateMixture& phi);

// The permutation under a classical atom, as 0-based images.
std::vector<int> classical_permutation(const AtomicTrace& atom);

struct WordCorpusParams {
  int max_len = 3;
  int sample_count = 200;
};

// Every word of length 1 and 2, plus sample_count seeded random words per
// length in [3, max_len] when n ≥ 4. Exhaustive growth is n^(2ℓ), so longer
// lengths are sampled.
std::vector<Word> word_corpus(int n, const WordCorpusParams& params, std::uint64_t seed);

}  // namespace qham::states

#endif  // QHAM_STATES_HPP
