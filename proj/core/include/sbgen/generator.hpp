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

#ifndef SBGEN_GENERATOR_HPP_
#define SBGEN_GENERATOR_HPP_

#include <cstdint>
#include <vector>

#include "sbgen/chart.hpp"
#include "sbgen/grammar.hpp"

namespace sbgen {

enum class GenMode { kFirst, kAll };

struct GenConfig {
  AgendaDiscipline discipline = AgendaDiscipline::kFifo;
  bool redundancy_check = true;
  std::uint64_t max_edges = 1'000'000;
  GenMode mode = GenMode::kAll;
};

struct GenStats {
  std::uint64_t edges_created = 0;    // pushed to the agenda, initial edges included
  std::uint64_t edges_in_chart = 0;
  std::uint64_t redundant_dropped = 0;
  std::uint64_t derivations = 0;      // successful edges, before deduplication
};

// One generation run over a bag: the agenda is seeded with an inactive edge
// per sign (the sign is already a completed constituent), then the loop pops
// an edge, records it if it spans the bag under the start functor, applies
// rule invocation and dot movement, and adds it to the chart.
class GenSession {
 public:
  GenSession(const Grammar& grammar, const Bag& bag, GenConfig config = {});

  NodeSet all_bits() const { return all_bits_; }
  const Chart& chart() const { return chart_; }
  const Agenda& agenda() const { return agenda_; }
  const GenStats& stats() const { return stats_; }

  bool is_success(const Edge& e) const;

  // For every phrasal rule whose first right-hand-side category unifies with
  // the inactive edge's left hand side, instantiate the rule and enqueue the
  // resulting edge (inactive at once for unary rules). Returns the edges
  // that survived the redundancy check.
  std::vector<Edge> rule_invocation(const Edge& inactive);

  // Combine the popped edge with compatible chart edges of the opposite
  // kind: node sets disjoint, expectation unifies with the inactive side's
  // left hand side. Returns the enqueued combinations.
  std::vector<Edge> dot_movement(const Edge& e);

  // Drives the loop to completion (or to the first success in first mode).
  // Sentences come back in discovery order, deduplicated.
  std::vector<std::vector<std::string>> run();

 private:
  bool enqueue(Edge e);
  std::vector<Edge> combine_against_chart(const Edge& popped);

  const Grammar& grammar_;
  GenConfig config_;
  NodeSet all_bits_;
  Chart chart_;
  Agenda agenda_;
  FreshVars fresh_;
  GenStats stats_;
};

struct GenResult {
  std::vector<std::vector<std::string>> sentences;
  GenStats stats;
};

GenResult generate(const Bag& bag, const Grammar& grammar,
                   const GenConfig& config = {});

}  // namespace sbgen

#endif  // SBGEN_GENERATOR_HPP_
