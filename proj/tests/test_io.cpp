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

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qham/distances.hpp"
#include "qham/errors.hpp"
#include "qham/io.hpp"

namespace {

// Writes content to a throwaway file and removes it when the guard dies.
struct TempFile {
  std::string path;

  TempFile(const std::string& name, const std::string& content)
      : path("io_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kSwapRep = R"({
  "n": 2,
  "d": 1,
  "grid": [
    [[[0.0, 0.0]], [[1.0, 0.0]]],
    [[[1.0, 0.0]], [[0.0, 0.0]]]
  ]
})";

}  // namespace

TEST_CASE("representation files parse and validate") {
  TempFile file("swap.json", kSwapRep);
  const auto loaded = qham::io::parse_file(file.path);
  CHECK(loaded.kind == qham::io::FileKind::kRepresentation);
  CHECK(qham::io::validate_file(loaded).pass);
  const auto m = qham::io::load_magic(file.path);
  CHECK(m.same_grid(qham::magic::from_permutation(2, {1, 0}), 0.0));
}

TEST_CASE("representation file also loads as a point mass mixture") {
  TempFile file("swap_as_mixture.json", kSwapRep);
  const auto phi = qham::io::load_mixture(file.path);
  CHECK(phi.size() == 1);
  CHECK(phi.at(0).weight == 1.0);
  CHECK(qham::states::is_classical(phi));
}

TEST_CASE("mixture files with permutation shorthand") {
  TempFile file("mix.json", R"({
    "n": 3,
    "atoms": [
      {"weight": 0.5, "perm": [0, 1, 2]},
      {"weight": 0.5, "perm": [1, 0, 2]}
    ]
  })");
  const auto phi = qham::io::load_mixture(file.path);
  CHECK(phi.size() == 2);
  CHECK(qham::states::is_classical(phi));
  CHECK(qham::states::classical_permutation(phi.at(1).atom) ==
        std::vector<int>{1, 0, 2});
}

TEST_CASE("nested cell layout agrees with the flat layout") {
  TempFile nested("nested.json", R"({
    "n": 2,
    "d": 2,
    "grid": [
      [
        [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
        [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
      ],
      [
        [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]],
        [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]
      ]
    ]
  })");
  TempFile flat("flat.json", R"({
    "n": 2,
    "d": 2,
    "grid": [
      [
        [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]
      ],
      [
        [[0.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]],
        [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]
      ]
    ]
  })");
  const auto a = qham::io::load_magic(nested.path);
  const auto b = qham::io::load_magic(flat.path);
  CHECK(a.same_grid(b, 0.0));
}

TEST_CASE("malformed json raises a parse error") {
  TempFile file("broken.json", "{ this is not json");
  CHECK_THROWS_AS(qham::io::parse_file(file.path), qham::ParseError);
  CHECK_THROWS_AS(qham::io::parse_file("no_such_file_anywhere.json"), qham::ParseError);
}

TEST_CASE("permutation image out of range raises a parse error") {
  TempFile file("bad_perm.json", R"({
    "n": 3,
    "atoms": [{"weight": 1.0, "perm": [0, 1, 7]}]
  })");
  CHECK_THROWS_AS(qham::io::parse_file(file.path), qham::ParseError);
}

TEST_CASE("repeated permutation image fails validation through column sums") {
  TempFile file("dup_perm.json", R"({
    "n": 3,
    "atoms": [{"weight": 1.0, "perm": [0, 0, 2]}]
  })");
  const auto loaded = qham::io::parse_file(file.path);
  CHECK_FALSE(qham::io::validate_file(loaded).pass);
}

TEST_CASE("broken row sums fail validation but parse fine") {
  TempFile file("bad_row.json", R"({
    "n": 2,
    "d": 1,
    "grid": [
      [[[1.0, 0.0]], [[1.0, 0.0]]],
      [[[1.0, 0.0]], [[0.0, 0.0]]]
    ]
  })");
  const auto loaded = qham::io::parse_file(file.path);
  const auto report = qham::io::validate_file(loaded);
  CHECK_FALSE(report.pass);
  CHECK(report.worst_row_sum >= 1.0 - 1e-12);
  CHECK_THROWS_AS(qham::io::load_magic(file.path), qham::Error);
}

TEST_CASE("mixture weights must sum to one") {
  TempFile file("bad_weights.json", R"({
    "n": 2,
    "atoms": [{"weight": 0.25, "perm": [0, 1]}, {"weight": 0.25, "perm": [1, 0]}]
  })");
  CHECK_FALSE(qham::io::validate_file(qham::io::parse_file(file.path)).pass);
}

TEST_CASE("representation json round trips") {
  const auto m = qham::magic::from_permutation(3, {2, 0, 1});
  TempFile file("roundtrip.json", qham::io::to_json(m));
  CHECK(qham::io::load_magic(file.path).same_grid(m, 0.0));
}

TEST_CASE("mixture json round trips") {
  using qham::states::AtomicTrace;
  const qham::states::StateMixture phi{
      {{0.25, AtomicTrace(qham::magic::from_permutation(2, {0, 1}))},
       {0.75, AtomicTrace(qham::magic::from_permutation(2, {1, 0}))}}};
  TempFile file("mix_roundtrip.json", qham::io::to_json(phi));
  const auto loaded = qham::io::load_mixture(file.path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded.at(0).weight == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(loaded.at(1).atom.rep.same_grid(qham::magic::from_permutation(2, {1, 0}), 0.0));
}

TEST_CASE("distance report serialization carries the certificate fields") {
  const auto phi = qham::states::delta_permutation(2, {0, 1});
  const auto psi = qham::states::delta_permutation(2, {1, 0});
  const auto report = qham::dist::distance_tensor(phi, psi, qham::RunConfig{});
  const auto parsed = nlohmann::json::parse(qham::io::to_json(report));
  CHECK(parsed.at("metric") == "tensor");
  CHECK(parsed.at("upper").get<double>() == 1.0);
  CHECK(parsed.at("lower").get<double>() == 1.0);
  CHECK(parsed.at("exact_for_presented_atoms").get<bool>());
  CHECK(parsed.at("plan").is_array());
  CHECK(parsed.at("witnesses").is_array());
  const std::string csv = qham::io::to_csv(report);
  CHECK(csv.rfind("metric,upper,lower,exact_for_presented_atoms\n", 0) == 0);
}
