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

#ifndef BIRVOL_CLI_ACCEPTANCE_HPP_
#define BIRVOL_CLI_ACCEPTANCE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace birvol::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json data;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

// File name -> bytes; everything a run would write to its output directory.
using Artifacts = std::map<std::string, std::string>;

CriterionResult criterion_eigenvalues();
CriterionResult criterion_intersections();
CriterionResult criterion_l1_invariance(std::uint64_t seed);
CriterionResult criterion_volume_invariance(std::uint64_t seed);
CriterionResult criterion_growth(unsigned threads, Artifacts& artifacts);
CriterionResult criterion_ample_independence(unsigned threads);
CriterionResult criterion_multiples(unsigned threads);
CriterionResult criterion_floor_bounds(std::uint64_t seed);
CriterionResult criterion_hk_boundary(std::uint64_t seed);

// Criteria 1-9 plus their manifest.
std::vector<CriterionResult> run_core_criteria(const AcceptanceOptions& opts, Artifacts& artifacts);

// All ten criteria; the last one repeats the core run with a different thread
// count and compares the artifacts byte for byte.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, Artifacts& artifacts);

nlohmann::json manifest(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts);
std::string format_line(const CriterionResult& r);

}  // namespace birvol::cli

#endif  // BIRVOL_CLI_ACCEPTANCE_HPP_
