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

#include "qham/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace qham::io {

using nlohmann::json;

namespace {

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int require_positive_int(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError("missing integer field \"" + key + "\"");
  }
  const int value = j.at(key).get<int>();
  if (value <= 0) {
    throw ParseError("field \"" + key + "\" must be positive");
  }
  return value;
}

linalg::Complex parse_entry(const json& entry) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number()) {
    throw ParseError("matrix entry must be a [re, im] pair");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

// Accepts the d×d cell either flat (d·d pairs, row-major) or nested
// (d rows of d pairs).
linalg::Matrix parse_cell(const json& cell, int d) {
  if (!cell.is_array()) {
    throw ParseError("grid cell must be an array");
  }
  linalg::Matrix m(d, d);
  const std::size_t dd = static_cast<std::size_t>(d) * d;
  // The two layouts coincide for d = 1 and have different lengths otherwise.
  if (cell.size() == dd) {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        m(r, c) = parse_entry(cell[static_cast<std::size_t>(r) * d + c]);
      }
    }
    return m;
  }
  if (cell.size() == static_cast<std::size_t>(d)) {
    for (int r = 0; r < d; ++r) {
      const json& row = cell[r];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) {
        throw ParseError("nested grid cell row must have d entries");
      }
      for (int c = 0; c < d; ++c) {
        m(r, c) = parse_entry(row[c]);
      }
    }
    return m;
  }
  throw ParseError("grid cell must hold d*d entries (flat) or d rows of d");
}

RawRepresentation parse_representation(const json& j) {
  RawRepresentation raw;
  raw.n = require_positive_int(j, "n");
  raw.d = require_positive_int(j, "d");
  if (!j.contains("grid") || !j.at("grid").is_array() ||
      j.at("grid").size() != static_cast<std::size_t>(raw.n)) {
    throw ParseError("\"grid\" must be an array of n rows");
  }
  raw.cells.reserve(static_cast<std::size_t>(raw.n) * raw.n);
  for (int i = 0; i < raw.n; ++i) {
    const json& row = j.at("grid")[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(raw.n)) {
      throw ParseError("grid row must have n cells");
    }
    for (int jcol = 0; jcol < raw.n; ++jcol) {
      raw.cells.push_back(parse_cell(row[jcol], raw.d));
    }
  }
  return raw;
}

// Expands the 0-based image list to a d = 1 indicator grid. Duplicate images
// produce a grid that fails validation (column sums); out-of-range images
// cannot be placed at all and are structural errors.
RawRepresentation expand_permutation(const json& perm, int n) {
  if (!perm.is_array() || perm.size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"perm\" must list n images");
  }
  RawRepresentation raw;
  raw.n = n;
  raw.d = 1;
  raw.cells.assign(static_cast<std::size_t>(n) * n,
                   linalg::Matrix::Zero(1, 1));
  for (int i = 0; i < n; ++i) {
    if (!perm[i].is_number_integer()) {
      throw ParseError("\"perm\" images must be integers");
    }
    const int image = perm[i].get<int>();
    if (image < 0 || image >= n) {
      throw ParseError("\"perm\" image out of range");
    }
    raw.cells[static_cast<std::size_t>(i) * n + image](0, 0) = 1.0;
  }
  return raw;
}

json entry_to_json(const linalg::Complex& z) {
  return json::array({z.real(), z.imag()});
}

json cell_to_json(const linalg::Matrix& m) {
  json cell = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cell.push_back(entry_to_json(m(r, c)));
    }
  }
  return cell;
}

json magic_to_json(const magic::MagicUnitary& m) {
  json grid = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) {
      row.push_back(cell_to_json(m.cell(i, j).mat()));
    }
    grid.push_back(std::move(row));
  }
  return json{{"n", m.n()}, {"d", m.d()}, {"grid", std::move(grid)}};
}

}  // namespace

LoadedFile parse_file(const std::string& path) {
  const json j = parse_json_file(path);
  if (!j.is_object()) {
    throw ParseError(path + ": top level must be an object");
  }
  LoadedFile file;
  if (j.contains("atoms")) {
    file.kind = FileKind::kMixture;
    const int n = require_positive_int(j, "n");
    if (!j.at("atoms").is_array() || j.at("atoms").empty()) {
      throw ParseError("\"atoms\" must be a nonempty array");
    }
    for (const json& entry : j.at("atoms")) {
      if (!entry.is_object() || !entry.contains("weight") ||
          !entry.at("weight").is_number()) {
        throw ParseError("each atom needs a numeric \"weight\"");
      }
      RawAtom atom;
      atom.weight = entry.at("weight").get<double>();
      if (entry.contains("perm")) {
        atom.rep = expand_permutation(entry.at("perm"), n);
      } else if (entry.contains("rep")) {
        atom.rep = parse_representation(entry.at("rep"));
      } else {
        throw ParseError("each atom needs \"rep\" or \"perm\"");
      }
      if (atom.rep.n != n) {
        throw ParseError("atom size differs from mixture \"n\"");
      }
      file.atoms.push_back(std::move(atom));
    }
  } else {
    file.kind = FileKind::kRepresentation;
    file.rep = parse_representation(j);
  }
  return file;
}

magic::ValidationReport validate_file(const LoadedFile& file) {
  if (file.kind == FileKind::kRepresentation) {
    return magic::validate_cells(file.rep.n, file.rep.d, file.rep.cells);
  }
  magic::ValidationReport combined;
  combined.pass = true;
  double weight_sum = 0.0;
  bool weights_ok = true;
  for (std::size_t a = 0; a < file.atoms.size(); ++a) {
    const RawAtom& atom = file.atoms[a];
    if (!(atom.weight >= 0.0) || !std::isfinite(atom.weight)) {
      weights_ok = false;
    }
    weight_sum += atom.weight;
    const auto report =
        magic::validate_cells(atom.rep.n, atom.rep.d, atom.rep.cells);
    combined.worst_hermiticity =
        std::max(combined.worst_hermiticity, report.worst_hermiticity);
    combined.worst_projection =
        std::max(combined.worst_projection, report.worst_projection);
    combined.worst_row_sum = std::max(combined.worst_row_sum, report.worst_row_sum);
    combined.worst_col_sum = std::max(combined.worst_col_sum, report.worst_col_sum);
    if (!report.pass) {
      combined.pass = false;
      if (!combined.detail.empty()) combined.detail += "; ";
      combined.detail += "atom " + std::to_string(a) + ": " + report.detail;
    }
  }
  const double weight_residual = std::abs(weight_sum - 1.0);
  if (!weights_ok || weight_residual > tol::kFileWeightSum) {
    combined.pass = false;
    if (!combined.detail.empty()) combined.detail += "; ";
    combined.detail += weights_ok
                           ? "weights sum to " + std::to_string(weight_sum)
                           : "weights must be finite and nonnegative";
  }
  return combined;
}

magic::MagicUnitary to_magic(const RawRepresentation& raw) {
  const auto report = magic::validate_cells(raw.n, raw.d, raw.cells);
  if (!report.pass) {
    throw Error("representation fails validation: " + report.detail);
  }
  std::vector<linalg::ProjectionMatrix> grid;
  grid.reserve(raw.cells.size());
  for (const auto& cell : raw.cells) {
    grid.emplace_back(cell);
  }
  return magic::MagicUnitary(raw.n, raw.d, std::move(grid));
}

magic::MagicUnitary load_magic(const std::string& path) {
  const LoadedFile file = parse_file(path);
  if (file.kind != FileKind::kRepresentation) {
    throw ParseError(path + ": expected a representation file");
  }
  return to_magic(file.rep);
}

states::StateMixture load_mixture(const std::string& path) {
  const LoadedFile file = parse_file(path);
  if (file.kind == FileKind::kRepresentation) {
    return states::delta(to_magic(file.rep));
  }
  double weight_sum = 0.0;
  for (const auto& atom : file.atoms) {
    if (!(atom.weight >= 0.0) || !std::isfinite(atom.weight)) {
      throw Error("mixture weights must be finite and nonnegative");
    }
    weight_sum += atom.weight;
  }
  if (std::abs(weight_sum - 1.0) > tol::kFileWeightSum) {
    throw Error("mixture weights sum to " + std::to_string(weight_sum));
  }
  std::vector<states::WeightedAtom> atoms;
  atoms.reserve(file.atoms.size());
  for (const auto& atom : file.atoms) {
    atoms.push_back({atom.weight, states::AtomicTrace(to_magic(atom.rep))});
  }
  return states::normalize(states::StateMixture(std::move(atoms)));
}

std::string to_json(const magic::MagicUnitary& m) { return magic_to_json(m).dump(2); }

std::string to_json(const states::StateMixture& phi) {
  json atoms = json::array();
  for (const auto& wa : phi.atoms()) {
    atoms.push_back(json{{"weight", wa.weight}, {"rep", magic_to_json(wa.atom.rep)}});
  }
  return json{{"n", phi.n()}, {"atoms", std::move(atoms)}}.dump(2);
}

std::string to_json(const magic::ValidationReport& report) {
  return json{{"pass", report.pass},
              {"worst_hermiticity", report.worst_hermiticity},
              {"worst_projection", report.worst_projection},
              {"worst_row_sum", report.worst_row_sum},
              {"worst_col_sum", report.worst_col_sum},
              {"detail", report.detail}}
      .dump(2);
}

std::string to_json(const dist::DistanceReport& report) {
  json plan = json::array();
  for (Eigen::Index r = 0; r < report.plan.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < report.plan.cols(); ++c) {
      row.push_back(report.plan(r, c));
    }
    plan.push_back(std::move(row));
  }
  return json{{"metric", dist::metric_name(report.metric)},
              {"upper", report.upper},
              {"lower", report.lower},
              {"exact_for_presented_atoms", report.exact_for_presented_atoms},
              {"plan", std::move(plan)},
              {"witnesses", report.witnesses}}
      .dump(2);
}

std::string to_csv(const dist::DistanceReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "metric,upper,lower,exact_for_presented_atoms\n"
      << dist::metric_name(report.metric) << "," << report.upper << ","
      << report.lower << "," << (report.exact_for_presented_atoms ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace qham::io
