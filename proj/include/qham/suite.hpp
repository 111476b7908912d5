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

#ifndef QHAM_SUITE_HPP
#define QHAM_SUITE_HPP

#include <string>
#include <vector>

#include "qham/config.hpp"

namespace qham::suite {

// One property check. pass is defined as worst ≤ tol; a skipped check (the
// dimension cap ruled out every instance) passes vacuously and is reported
// as such. tol is the per-check default unless overridden through
// RunConfig::tolerance_overrides under the check's name.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  double worst = 0.0;
  double tol = 0.0;
  std::string detail;
};

// Every invariant and property check over the seeded corpus, sorted by name.
std::vector<CheckResult> run_suite(const RunConfig& config);

// One acceptance criterion, timed.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// The ten acceptance criteria at their stated corpus sizes and tolerances.
std::vector<CriterionResult> run_acceptance(const RunConfig& config);

std::string results_to_json(const std::vector<CheckResult>& results,
                            const RunConfig& config);
std::string results_to_csv(const std::vector<CheckResult>& results);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace qham::suite

#endif  // QHAM_SUITE_HPP
