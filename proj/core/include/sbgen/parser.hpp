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

#ifndef SBGEN_PARSER_HPP_
#define SBGEN_PARSER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbgen/chart.hpp"
#include "sbgen/grammar.hpp"

namespace sbgen {

// A dotted-rule item over a contiguous span of the input sentence. Besides
// the phrase it also carries the instantiated leaf signs of its derivation,
// so a spanning edge directly yields the bag of leaves.
struct SpanEdge {
  int start = 0;
  int end = 0;
  Category lhs;
  std::vector<std::string> phrase;
  std::vector<Category> found;
  std::vector<Category> remaining;
  std::vector<Sign> leaves;

  bool inactive() const { return remaining.empty(); }
  const Category& expected() const { return remaining.front(); }
};

bool alpha_equal(const SpanEdge& a, const SpanEdge& b);
std::string render_span_edge(const SpanEdge& e);

// One complete analysis: the spanning category and the leaf signs in
// surface order, indices instantiated by the unifications of the parse.
struct Analysis {
  Category root;
  std::vector<Sign> leaves;
};

struct ParseResult {
  std::vector<Analysis> analyses;

  bool accepted() const { return !analyses.empty(); }
};

struct ParseConfig {
  AgendaDiscipline discipline = AgendaDiscipline::kFifo;
  bool redundancy_check = true;
  std::uint64_t max_edges = 1'000'000;
};

// Bottom-up active chart parser over word spans.
class ParseSession {
 public:
  ParseSession(const Grammar& grammar, std::vector<std::string> words,
               ParseConfig config = {});

  bool is_success(const SpanEdge& e) const;
  std::vector<SpanEdge> rule_invocation(const SpanEdge& inactive);
  std::vector<SpanEdge> dot_movement(const SpanEdge& e);

  ParseResult run();

  const std::vector<SpanEdge>& chart_edges() const { return chart_; }
  const BasicAgenda<SpanEdge>& agenda() const { return agenda_; }

 private:
  bool enqueue(SpanEdge e);
  bool redundant(const SpanEdge& e) const;

  const Grammar& grammar_;
  ParseConfig config_;
  std::vector<std::string> words_;
  std::vector<SpanEdge> chart_;
  // Chart indices by span boundary, for the adjacency scan.
  std::vector<std::vector<std::size_t>> inactive_starting_at_;
  std::vector<std::vector<std::size_t>> active_ending_at_;
  BasicAgenda<SpanEdge> agenda_;
  FreshVars fresh_;
  std::uint64_t edges_created_ = 0;
};

ParseResult parse(std::span<const std::string> words, const Grammar& grammar,
                  ParseConfig config = {});

// Bag of leaf signs of one analysis, in surface order.
Bag extract_bag(const ParseResult& result, std::size_t which);

std::vector<std::string> split_words(std::string_view sentence);

}  // namespace sbgen

#endif  // SBGEN_PARSER_HPP_
