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

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qham/config.hpp"
#include "qham/distances.hpp"
#include "qham/errors.hpp"
#include "qham/io.hpp"
#include "qham/suite.hpp"

namespace {

// Exit codes: 0 success, 1 domain or validation failure, 2 unreadable or
// malformed input file, 3 dimension cap exceeded.
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitOverflow = 3;

void apply_env_seed(qham::RunConfig& config) {
  const char* env = std::getenv("QHAM_SEED");
  if (env == nullptr) return;
  std::uint64_t value = 0;
  const char* end = env + std::string_view(env).size();
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec == std::errc() && ptr == end) config.seed = value;
}

void apply_tolerance_overrides(qham::RunConfig& config,
                               const std::vector<std::string>& entries) {
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw qham::Error("tolerance override must look like name=value: " + entry);
    }
    const std::string name = entry.substr(0, eq);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(entry.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw qham::Error("tolerance override has no numeric value: " + entry);
    }
    if (used != entry.size() - eq - 1) {
      throw qham::Error("tolerance override has trailing junk: " + entry);
    }
    config.tolerance_overrides[name] = value;
  }
}

std::string fixed3(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

int cmd_validate(const std::string& path, bool as_json) {
  const auto file = qham::io::parse_file(path);
  const auto report = qham::io::validate_file(file);
  if (as_json) {
    std::cout << qham::io::to_json(report) << "\n";
  } else {
    std::cout << "kind: "
              << (file.kind == qham::io::FileKind::kRepresentation ? "representation"
                                                                   : "mixture")
              << "\n";
    std::cout << "pass: " << (report.pass ? "yes" : "no") << "\n";
    std::cout << "worst hermiticity residual: " << fixed3(report.worst_hermiticity)
              << "\n";
    std::cout << "worst projection residual:  " << fixed3(report.worst_projection)
              << "\n";
    std::cout << "worst row sum residual:     " << fixed3(report.worst_row_sum) << "\n";
    std::cout << "worst column sum residual:  " << fixed3(report.worst_col_sum) << "\n";
    if (!report.detail.empty()) std::cout << "detail: " << report.detail << "\n";
  }
  return report.pass ? 0 : kExitFailure;
}

int cmd_distance(const std::string& path_a, const std::string& path_b,
                 const std::string& metric, bool as_csv, const qham::RunConfig& config) {
  const auto phi = qham::io::load_mixture(path_a);
  const auto psi = qham::io::load_mixture(path_b);
  std::vector<qham::dist::Metric> metrics;
  if (metric == "tensor") {
    metrics = {qham::dist::Metric::kTensor};
  } else if (metric == "free") {
    metrics = {qham::dist::Metric::kFree};
  } else if (metric == "l1") {
    metrics = {qham::dist::Metric::kL1};
  } else {
    metrics = {qham::dist::Metric::kTensor, qham::dist::Metric::kFree,
               qham::dist::Metric::kL1};
  }
  std::vector<qham::dist::DistanceReport> reports;
  reports.reserve(metrics.size());
  for (const auto m : metrics) {
    reports.push_back(qham::dist::distance(m, phi, psi, config));
  }
  if (as_csv) {
    bool first = true;
    for (const auto& report : reports) {
      const std::string csv = qham::io::to_csv(report);
      if (first) {
        std::cout << csv;
        first = false;
      } else {
        // Drop the repeated header line.
        std::cout << csv.substr(csv.find('\n') + 1);
      }
    }
  } else if (reports.size() == 1) {
    std::cout << qham::io::to_json(reports.front()) << "\n";
  } else {
    nlohmann::json combined;
    for (const auto& report : reports) {
      combined[qham::dist::metric_name(report.metric)] =
          nlohmann::json::parse(qham::io::to_json(report));
    }
    std::cout << combined.dump(2) << "\n";
  }
  return 0;
}

int cmd_suite(const qham::RunConfig& config, bool as_json, bool as_csv) {
  const auto results = qham::suite::run_suite(config);
  if (as_json) {
    std::cout << qham::suite::results_to_json(results, config) << "\n";
  } else if (as_csv) {
    std::cout << qham::suite::results_to_csv(results);
  } else {
    std::cout << std::left << std::setw(36) << "property" << std::setw(6) << "state"
              << std::setw(12) << "worst" << std::setw(12) << "tol"
              << "detail\n";
    for (const auto& r : results) {
      const char* state = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      std::cout << std::left << std::setw(36) << r.name << std::setw(6) << state
                << std::setw(12) << fixed3(r.worst) << std::setw(12) << fixed3(r.tol)
                << r.detail << "\n";
    }
  }
  return qham::suite::all_pass(results) ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sandwich estimates for distances between states on the quantum "
               "permutation group"};
  app.require_subcommand(1);

  qham::RunConfig config;
  apply_env_seed(config);
  std::vector<std::string> tolerance_entries;

  auto add_config_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "corpus seed (QHAM_SEED overrides the default)");
    cmd->add_option("--dim-cap", config.dim_cap, "largest allowed product dimension")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--corpus-len", config.word_max_len,
                    "longest word in the lower-bound corpus")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--restarts", config.unitary_restarts,
                    "restarts for the same-space unitary search")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tolerance", tolerance_entries,
                    "override a named tolerance, e.g. --tolerance trace_identity=1e-6")
        ->take_all();
  };

  std::string validate_path;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "check a representation or mixture file");
  validate->add_option("path", validate_path, "input file")->required();
  validate->add_flag("--json", validate_json, "emit the report as JSON");

  std::string distance_a;
  std::string distance_b;
  std::string metric = "all";
  bool distance_json = false;
  bool distance_csv = false;
  auto* distance = app.add_subcommand("distance", "certified distance between two mixtures");
  distance->add_option("pathA", distance_a, "first mixture file")->required();
  distance->add_option("pathB", distance_b, "second mixture file")->required();
  distance->add_option("--metric", metric, "tensor, free, l1, or all")
      ->check(CLI::IsMember({"tensor", "free", "l1", "all"}));
  auto* dj = distance->add_flag("--json", distance_json, "emit JSON (default)");
  distance->add_flag("--csv", distance_csv, "emit CSV instead of JSON")->excludes(dj);
  add_config_flags(distance);

  bool suite_json = false;
  bool suite_csv = false;
  auto* suite = app.add_subcommand("suite", "run every property check on the seeded corpus");
  auto* sj = suite->add_flag("--json", suite_json, "emit the results as JSON");
  suite->add_flag("--csv", suite_csv, "emit the results as CSV")->excludes(sj);
  add_config_flags(suite);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_tolerance_overrides(config, tolerance_entries);
    if (validate->parsed()) return cmd_validate(validate_path, validate_json);
    if (distance->parsed()) {
      return cmd_distance(distance_a, distance_b, metric, distance_csv, config);
    }
    return cmd_suite(config, suite_json, suite_csv);
  } catch (const qham::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qham::DimensionOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const qham::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
