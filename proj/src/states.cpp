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

#include "qham/states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qham/rng.hpp"

namespace qham::states {

using linalg::Matrix;
using linalg::RealMatrix;

AtomicTrace::AtomicTrace(magic::MagicUnitary r) : rep(std::move(r)), omega(rep.n(), rep.n()) {
  for (int i = 0; i < rep.n(); ++i) {
    for (int j = 0; j < rep.n(); ++j) {
      omega(i, j) = linalg::normalized_trace(rep.cell(i, j).hermitian());
    }
  }
}

StateMixture::StateMixture(std::vector<WeightedAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw SizeMismatch("mixture needs at least one atom");
  }
  n_ = atoms_.front().atom.rep.n();
  for (const auto& wa : atoms_) {
    if (wa.atom.rep.n() != n_) {
      throw SizeMismatch("mixture atoms disagree on n");
    }
    if (wa.weight < 0.0) {
      throw AllZeroWeights("mixture weight is negative: " + std::to_string(wa.weight));
    }
  }
}

const WeightedAtom& StateMixture::at(std::size_t idx) const {
  if (idx >= atoms_.size()) {
    throw IndexOutOfRange("atom index " + std::to_string(idx) + " out of range");
  }
  return atoms_[idx];
}

StateMixture delta(magic::MagicUnitary rep) {
  std::vector<WeightedAtom> atoms;
  atoms.push_back({1.0, AtomicTrace(std::move(rep))});
  return StateMixture(std::move(atoms));
}

StateMixture delta_permutation(int n, const std::vector<int>& sigma) {
  return delta(magic::from_permutation(n, sigma));
}

StateMixture normalize(const StateMixture& phi) {
  double total = 0.0;
  for (const auto& wa : phi.atoms()) total += wa.weight;
  if (total <= 0.0) {
    throw AllZeroWeights("mixture weights sum to " + std::to_string(total));
  }
  std::vector<WeightedAtom> kept;
  double kept_total = 0.0;
  for (const auto& wa : phi.atoms()) {
    const double w = wa.weight / total;
    if (w >= tol::kAtomDrop) {
      kept.push_back({w, wa.atom});
      kept_total += w;
    }
  }
  if (kept.empty()) {
    throw AllZeroWeights("all mixture atoms fall below the drop threshold");
  }
  for (auto& wa : kept) wa.weight /= kept_total;
  return StateMixture(std::move(kept));
}

StateMixture dedupe(const StateMixture& phi) {
  std::vector<WeightedAtom> merged;
  for (const auto& wa : phi.atoms()) {
    bool found = false;
    for (auto& existing : merged) {
      if (existing.atom.rep.same_grid(wa.atom.rep, tol::kAtomIdentity)) {
        existing.weight += wa.weight;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(wa);
  }
  return StateMixture(std::move(merged));
}

double evaluate_word(const StateMixture& phi, const Word& w) {
  const int n = phi.n();
  for (const auto& [i, j] : w) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw IndexOutOfRange("word letter (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside [0," + std::to_string(n) + ")");
    }
  }
  std::complex<double> value = 0.0;
  for (const auto& wa : phi.atoms()) {
    const int d = wa.atom.rep.d();
    Matrix product = Matrix::Identity(d, d);
    for (const auto& [i, j] : w) {
      product = (product * wa.atom.rep.cell(i, j).mat()).eval();
    }
    value += wa.weight * (product.trace() / static_cast<double>(d));
  }
  if (std::abs(value.imag()) > tol::kWordImaginary) {
    throw Error("word value has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

RealMatrix birkhoff(const StateMixture& phi) {
  RealMatrix sum = RealMatrix::Zero(phi.n(), phi.n());
  for (const auto& wa : phi.atoms()) {
    sum += wa.weight * wa.atom.omega;
  }
  return sum;
}

StateMixture convolve_states(const StateMixture& phi, const StateMixture& psi, int dim_cap) {
  if (phi.n() != psi.n()) {
    throw SizeMismatch("convolve_states requires equal n");
  }
  std::vector<WeightedAtom> atoms;
  atoms.reserve(phi.size() * psi.size());
  for (const auto& wa : phi.atoms()) {
    for (const auto& wb : psi.atoms()) {
      atoms.push_back({wa.weight * wb.weight,
                       AtomicTrace(magic::convolve(wa.atom.rep, wb.atom.rep, dim_cap))});
    }
  }
  return StateMixture(std::move(atoms));
}

namespace {

bool is_classical_atom(const AtomicTrace& atom) {
  const int n = atom.rep.n();
  const int d = atom.rep.d();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = atom.omega(i, j);
      if (std::abs(w) > tol::kMagicSums && std::abs(w - 1.0) > tol::kMagicSums) {
        return false;
      }
      const Matrix& cell = atom.rep.cell(i, j).mat();
      const Matrix scalar = cell(0, 0) * Matrix::Identity(d, d);
      if (linalg::max_abs(cell - scalar) > tol::kMagicSums) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_classical(const StateMixture& phi) {
  for (const auto& wa : phi.atoms()) {
    if (!is_classical_atom(wa.atom)) return false;
  }
  return true;
}

std::vector<int> classical_permutation(const AtomicTrace& atom) {
  if (!is_classical_atom(atom)) {
    throw NotClassical("atom does not factor through a permutation");
  }
  const int n = atom.rep.n();
  std::vector<int> sigma(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (atom.omega(i, j) > 0.5) {
        sigma[i] = j;
        break;
      }
    }
    if (sigma[i] < 0) {
      throw NotClassical("classical atom row has no unit entry");
    }
  }
  return sigma;
}

std::vector<Word> word_corpus(int n, const WordCorpusParams& params, std::uint64_t seed) {
  std::vector<Word> corpus;
  if (params.max_len >= 1) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        corpus.push_back({{i, j}});
      }
    }
  }
  if (params.max_len >= 2) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int j1 = 0; j1 < n; ++j1) {
        for (int i2 = 0; i2 < n; ++i2) {
          for (int j2 = 0; j2 < n; ++j2) {
            corpus.push_back({{i1, j1}, {i2, j2}});
          }
        }
      }
    }
  }
  if (n >= 4) {
    Rng rng(seed);
    for (int len = 3; len <= params.max_len; ++len) {
      for (int s = 0; s < params.sample_count; ++s) {
        Word w;
        w.reserve(len);
        for (int t = 0; t < len; ++t) {
          const int i = rng.uniform_int(0, n - 1);
          const int j = rng.uniform_int(0, n - 1);
          w.push_back({i, j});
        }
        corpus.push_back(std::move(w));
      }
    }
  }
  return corpus;
}

}  // namespace qham::states
