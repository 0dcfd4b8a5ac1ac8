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

#include "sbgen/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "sbgen/error.hpp"
#include "sbgen/grammar_io.hpp"

namespace sbgen {

namespace {

constexpr const char kBenchGrammar[] = R"(
start s.
rule s(S|P) -> np(S) vp(S|P).
rule vp(S,O,E2) -> vp(S,O,E1) adv(E1,E2).
rule vp(S,O|P) -> v(S,O|P) np(O).
)";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Grammar bench_grammar() { return load_grammar_text(kBenchGrammar, "<bench>"); }

Bag bench_bag(int size) {
  if (size < 3 || size > NodeSet::kMaxBits) {
    throw std::invalid_argument("bench bag size must be in 3.." +
                                std::to_string(NodeSet::kMaxBits));
  }
  std::string text =
      "np(j) [\"anna\"]\n"
      "np(m) [\"bob\"]\n"
      "v(j,m,e0) [\"sees\"]\n";
  for (int k = 1; k <= size - 3; ++k) {
    text += "adv(e" + std::to_string(k - 1) + ",e" + std::to_string(k) +
            ") [\"adv" + std::to_string(k) + "\"]\n";
  }
  return load_bag_text(text, "<bench bag>");
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.min_size < 3 || options.min_size > options.max_size ||
      options.max_size > NodeSet::kMaxBits) {
    throw std::invalid_argument("bench sizes must satisfy 3 <= min <= max <= " +
                                std::to_string(NodeSet::kMaxBits));
  }
  if (options.reps < 1) throw std::invalid_argument("reps must be >= 1");

  const Grammar grammar = bench_grammar();
  std::vector<BenchRow> rows;

  for (int size = options.min_size; size <= options.max_size; ++size) {
    const Bag bag = bench_bag(size);
    for (int rep = 0; rep < options.reps; ++rep) {
      for (GenMode mode : {GenMode::kFirst, GenMode::kAll}) {
        GenConfig cfg = options.gen;
        cfg.mode = mode;
        BenchRow row;
        row.size = size;
        row.mode = mode == GenMode::kFirst ? "chart-first" : "chart-all";
        auto start = Clock::now();
        try {
          GenResult r = generate(bag, grammar, cfg);
          row.seconds = seconds_since(start);
          row.expansions = static_cast<long long>(r.stats.edges_created);
          row.sentences = static_cast<long long>(r.sentences.size());
        } catch (const BudgetExceededError& e) {
          row.seconds = seconds_since(start);
          row.expansions = static_cast<long long>(e.edges_created);
          row.sentences = -1;
        }
        rows.push_back(std::move(row));
      }
      for (bool first : {true, false}) {
        BenchRow row;
        row.size = size;
        row.mode = first ? "baseline-first" : "baseline-all";
        auto start = Clock::now();
        try {
          OracleRun r = first
                            ? oracle_generate_first(bag, grammar, options.oracle)
                            : oracle_generate_all(bag, grammar, options.oracle);
          row.seconds = seconds_since(start);
          row.expansions = static_cast<long long>(r.expansions);
          row.sentences = static_cast<long long>(r.sentences.size());
        } catch (const OracleBudgetError& e) {
          row.seconds = seconds_since(start);
          row.expansions = static_cast<long long>(e.expansions);
          row.sentences = -1;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "size,mode,seconds,expansions,sentences\n";
  char buf[64];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    out << r.size << ',' << r.mode << ',' << buf << ',' << r.expansions << ','
        << r.sentences << '\n';
  }
}

}  // namespace sbgen
