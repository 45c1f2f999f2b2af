// Copyright 2026 The birvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails. Tolerances live next to the checks in the cli library and
// in birvol/kappa.hpp.

#include <cstdlib>
#include <iostream>

#include "birvol/cli/acceptance.hpp"

int main(int argc, char** argv) {
  birvol::cli::AcceptanceOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  birvol::cli::Artifacts artifacts;
  const auto results = birvol::cli::run_acceptance(opts, artifacts);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << birvol::cli::format_line(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
