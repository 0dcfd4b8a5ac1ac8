// Copyright 2026 The sbgen Authors
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

#ifndef SBGEN_ORACLE_HPP_
#define SBGEN_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "sbgen/grammar.hpp"

namespace sbgen {

// Exhaustive top-down backtracking generator, used as an independent
// correctness oracle for the chart generator and as the slow baseline in the
// benchmark. It deliberately shares nothing with the chart machinery beyond
// terms and unification: no chart, no agenda, no indexing, no memoization.

struct OracleConfig {
  // Maximum number of rule applications in one derivation; 0 means twice the
  // bag size. Values below the bag size are raised to it.
  int depth_limit = 0;
  std::uint64_t max_expansions = 50'000'000;
  double time_budget_seconds = 120.0;
};

struct OracleRun {
  std::vector<std::vector<std::string>> sentences;  // deduplicated, discovery order
  std::uint64_t expansions = 0;  // candidate hypotheses attempted
};

OracleRun oracle_generate_all(const Bag& bag, const Grammar& grammar,
                              OracleConfig config = {});
OracleRun oracle_generate_first(const Bag& bag, const Grammar& grammar,
                                OracleConfig config = {});

}  // namespace sbgen

#endif  // SBGEN_ORACLE_HPP_
