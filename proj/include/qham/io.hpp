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

#ifndef QHAM_IO_HPP
#define QHAM_IO_HPP

#include <string>
#include <vector>

#include "qham/distances.hpp"
#include "qham/magic.hpp"
#include "qham/states.hpp"

namespace qham::io {

// File formats:
//   representation: { "n": int, "d": int, "grid": [[matrix, ...], ...] }
//     where matrix is the d×d complex cell as [re, im] pairs, either flat
//     (d·d entries, row-major) or nested (d rows of d entries).
//   mixture: { "n": int, "atoms": [ { "weight": real, "rep": <representation> } ] }
//     with the shorthand "perm": [images] (0-based) accepted in place of
//     "rep" for classical atoms.
// Structural problems raise ParseError; numeric validity is a separate
// concern, reported by validate_file without throwing.

enum class FileKind { kRepresentation, kMixture };

struct RawRepresentation {
  int n = 0;
  int d = 0;
  std::vector<linalg::Matrix> cells;  // row-major, n·n entries
};

struct RawAtom {
  double weight = 0.0;
  RawRepresentation rep;
};

struct LoadedFile {
  FileKind kind = FileKind::kRepresentation;
  RawRepresentation rep;        // kind == kRepresentation
  std::vector<RawAtom> atoms;   // kind == kMixture
};

LoadedFile parse_file(const std::string& path);

// Grid-relation residuals for every representation in the file, plus the
// weight conditions for mixtures (nonnegative, sum 1 within
// tol::kFileWeightSum). Never throws on bad numbers.
magic::ValidationReport validate_file(const LoadedFile& file);

// Checked constructions; throw the usual domain errors on invalid data.
magic::MagicUnitary to_magic(const RawRepresentation& raw);
magic::MagicUnitary load_magic(const std::string& path);

// A representation file loads as the point mass at its atom.
states::StateMixture load_mixture(const std::string& path);

std::string to_json(const magic::MagicUnitary& m);
std::string to_json(const states::StateMixture& phi);
std::string to_json(const magic::ValidationReport& report);
std::string to_json(const dist::DistanceReport& report);
std::string to_csv(const dist::DistanceReport& report);

}  // namespace qham::io

#endif  // QHAM_IO_HPP
