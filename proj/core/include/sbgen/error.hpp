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

#ifndef SBGEN_ERROR_HPP_
#define SBGEN_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sbgen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax or validation problem in an input file, with position information.
struct LoadError : Error {
  LoadError(const std::string& source, int line, int col,
            const std::string& message)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
              ": " + message),
        line(line),
        col(col) {}

  int line;
  int col;
};

// The generator exceeded its configured edge budget.
struct BudgetExceededError : Error {
  BudgetExceededError(std::uint64_t created, std::uint64_t limit)
      : Error("edge budget exceeded: created " + std::to_string(created) +
              " edges (limit " + std::to_string(limit) + ")"),
        edges_created(created),
        limit(limit) {}

  std::uint64_t edges_created;
  std::uint64_t limit;
};

// The exhaustive baseline ran out of its expansion or time budget.
struct OracleBudgetError : Error {
  OracleBudgetError(std::uint64_t expansions, const std::string& why)
      : Error("baseline budget exceeded after " + std::to_string(expansions) +
              " expansions (" + why + ")"),
        expansions(expansions) {}

  std::uint64_t expansions;
};

}  // namespace sbgen

#endif  // SBGEN_ERROR_HPP_
