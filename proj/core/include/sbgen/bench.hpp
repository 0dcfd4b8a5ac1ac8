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

#ifndef SBGEN_BENCH_HPP_
#define SBGEN_BENCH_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sbgen/generator.hpp"
#include "sbgen/grammar.hpp"
#include "sbgen/oracle.hpp"

namespace sbgen {

// One measurement: chart-first | chart-all | baseline-first | baseline-all.
// `expansions` is the chart edge count or the baseline hypothesis count;
// `sentences` is -1 when the run aborted on a budget.
struct BenchRow {
  int size;
  std::string mode;
  double seconds;
  long long expansions;
  long long sentences;
};

// Fixed grammar for the benchmark family: a transitive clause whose verb
// phrase takes a chain of adverbs. Adverb k rewrites the event index e(k-1)
// to ek, so each adverb attaches at exactly one place and the sentence count
// stays at one while the hypothesis space grows with the bag.
Grammar bench_grammar();

// The family bag of the given size (>= 3): subject, object, verb, and
// size-3 chained adverbs.
Bag bench_bag(int size);

struct BenchOptions {
  int min_size = 3;
  int max_size = 11;
  int reps = 1;
  GenConfig gen;
  OracleConfig oracle;
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

// CSV with header size,mode,seconds,expansions,sentences.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace sbgen

#endif  // SBGEN_BENCH_HPP_
