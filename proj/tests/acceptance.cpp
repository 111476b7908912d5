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

// Acceptance gate: runs the ten project criteria on the default seeded
// corpus and prints one verdict line per criterion. Exits nonzero if any
// criterion fails.

#include <cstdio>

#include "qham/config.hpp"
#include "qham/suite.hpp"

int main() {
  const qham::RunConfig config;
  const auto results = qham::suite::run_acceptance(config);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("criterion %2d %-22s %s  (%6.2fs)  %s\n", r.index, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, results.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", results.size());
  return 0;
}
