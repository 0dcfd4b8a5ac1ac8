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

#include <benchmark/benchmark.h>

#include "sbgen/bench.hpp"
#include "sbgen/generator.hpp"
#include "sbgen/grammar_io.hpp"
#include "sbgen/oracle.hpp"
#include "sbgen/parser.hpp"

namespace {

void BM_Unify(benchmark::State& state) {
  sbgen::Category a = sbgen::parse_category_text("vp(X,Y|P)");
  sbgen::Category b = sbgen::parse_category_text("vp(j,m,l)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbgen::unify(a, b));
  }
}
BENCHMARK(BM_Unify);

void BM_ChartGenerate(benchmark::State& state) {
  sbgen::Grammar g = sbgen::bench_grammar();
  sbgen::Bag bag = sbgen::bench_bag(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbgen::generate(bag, g));
  }
}
BENCHMARK(BM_ChartGenerate)->DenseRange(3, 11, 2);

void BM_BaselineGenerate(benchmark::State& state) {
  sbgen::Grammar g = sbgen::bench_grammar();
  sbgen::Bag bag = sbgen::bench_bag(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbgen::oracle_generate_all(bag, g));
  }
}
BENCHMARK(BM_BaselineGenerate)->DenseRange(3, 11, 2);

void BM_ParseClause(benchmark::State& state) {
  sbgen::Grammar g = sbgen::load_grammar_text(
      "start s.\n"
      "rule s(X|P) -> np(X) vp(X|P).\n"
      "rule vp(X,Y|P) -> v(X,Y|P) np(Y).\n"
      "lex np(j) -> \"John\".\n"
      "lex np(m) -> \"Mary\".\n"
      "lex v(X,Y,l) -> \"loves\".\n");
  std::vector<std::string> words = sbgen::split_words("John loves Mary");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbgen::parse(words, g));
  }
}
BENCHMARK(BM_ParseClause);

}  // namespace

BENCHMARK_MAIN();
