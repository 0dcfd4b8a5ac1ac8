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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbgen/bench.hpp"
#include "sbgen/error.hpp"
#include "sbgen/generator.hpp"
#include "sbgen/grammar_io.hpp"
#include "sbgen/oracle.hpp"
#include "sbgen/parser.hpp"
#include "sbgen/transfer.hpp"

namespace {

// Exit codes: 0 success, 1 no result, 2 input error, 3 edge budget exceeded.
constexpr int kOk = 0;
constexpr int kNoResult = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

std::uint64_t default_max_edges() {
  if (const char* env = std::getenv("SBGEN_MAX_EDGES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "sbgen: ignoring invalid SBGEN_MAX_EDGES value '" << env
              << "'\n";
  }
  return 1'000'000;
}

std::vector<std::string> words_from_args(const std::vector<std::string>& args) {
  std::vector<std::string> words;
  for (const std::string& a : args) {
    for (std::string& w : sbgen::split_words(a)) words.push_back(std::move(w));
  }
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

sbgen::AgendaDiscipline discipline_from(const std::string& name) {
  return name == "lifo" ? sbgen::AgendaDiscipline::kLifo
                        : sbgen::AgendaDiscipline::kFifo;
}

int cmd_parse(const std::string& grammar_path,
              const std::vector<std::string>& sentence) {
  sbgen::Grammar grammar = sbgen::load_grammar_file(grammar_path);
  sbgen::ParseResult result =
      sbgen::parse(words_from_args(sentence), grammar);
  for (std::size_t i = 0; i < result.analyses.size(); ++i) {
    const sbgen::Analysis& a = result.analyses[i];
    std::cout << "# analysis " << (i + 1) << ": "
              << sbgen::render_category(a.root) << "\n";
    std::cout << sbgen::render_bag(sbgen::extract_bag(result, i));
  }
  return result.accepted() ? kOk : kNoResult;
}

int cmd_generate(const std::string& grammar_path, const std::string& bag_path,
                 const sbgen::GenConfig& config) {
  sbgen::Grammar grammar = sbgen::load_grammar_file(grammar_path);
  sbgen::Bag bag = sbgen::load_bag_file(bag_path);
  sbgen::GenResult result = sbgen::generate(bag, grammar, config);
  for (const auto& sentence : result.sentences) {
    std::cout << join(sentence) << "\n";
  }
  return result.sentences.empty() ? kNoResult : kOk;
}

int cmd_translate(const std::string& src_grammar_path,
                  const std::string& tgt_grammar_path,
                  const std::string& bilingual_path,
                  const std::vector<std::string>& sentence,
                  const sbgen::GenConfig& config) {
  sbgen::Grammar src = sbgen::load_grammar_file(src_grammar_path);
  sbgen::Grammar tgt = sbgen::load_grammar_file(tgt_grammar_path);
  std::vector<sbgen::BilingualEntry> lexicon =
      sbgen::load_bilingual_file(bilingual_path);

  sbgen::ParseResult parses;
  try {
    parses = sbgen::parse(words_from_args(sentence), src);
  } catch (const sbgen::BudgetExceededError&) {
    throw;
  } catch (const sbgen::Error& e) {
    throw sbgen::Error(std::string("parse: ") + e.what());
  }

  std::vector<std::string> output;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < parses.analyses.size(); ++i) {
    sbgen::TransferResult transferred;
    try {
      transferred = sbgen::transfer(sbgen::extract_bag(parses, i), lexicon);
    } catch (const sbgen::Error& e) {
      throw sbgen::Error(std::string("transfer: ") + e.what());
    }
    for (const sbgen::TargetBag& target : transferred.bags) {
      sbgen::GenResult generated;
      try {
        generated = sbgen::generate(target.bag, tgt, config);
      } catch (const sbgen::BudgetExceededError&) {
        throw;
      } catch (const sbgen::Error& e) {
        throw sbgen::Error(std::string("generate: ") + e.what());
      }
      for (const auto& sentence_words : generated.sentences) {
        std::string line = join(sentence_words);
        if (seen.insert(line).second) output.push_back(std::move(line));
      }
    }
  }
  for (const std::string& line : output) std::cout << line << "\n";
  return output.empty() ? kNoResult : kOk;
}

int cmd_bench(const sbgen::BenchOptions& options, const std::string& csv_path) {
  std::vector<sbgen::BenchRow> rows = sbgen::run_bench(options);
  if (csv_path.empty() || csv_path == "-") {
    sbgen::write_bench_csv(std::cout, rows);
  } else {
    std::ofstream out(csv_path);
    if (!out) throw sbgen::Error("cannot write CSV file: " + csv_path);
    sbgen::write_bench_csv(out, rows);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shake-and-Bake translation: chart parser, bag transfer, and "
               "active chart generator"};
  app.require_subcommand(1);

  std::string grammar_path, bag_path;
  std::string src_grammar_path, tgt_grammar_path, bilingual_path;
  std::vector<std::string> sentence;
  std::string agenda = "fifo";
  bool first = false, all = false, no_redundancy = false;
  std::uint64_t max_edges = default_max_edges();
  sbgen::BenchOptions bench;
  std::string csv_path;

  CLI::App* parse = app.add_subcommand("parse", "Parse a sentence and print "
                                                "each analysis as a bag");
  parse->add_option("-g,--grammar", grammar_path, "grammar file (.sbg)")
      ->required();
  parse->add_option("sentence", sentence, "sentence words")->required();

  CLI::App* generate =
      app.add_subcommand("generate", "Generate sentences from a bag");
  generate->add_option("-g,--grammar", grammar_path, "grammar file (.sbg)")
      ->required();
  generate->add_option("-b,--bag", bag_path, "bag file (.sbb)")->required();
  generate->add_flag("--first", first, "stop at the first sentence");
  generate->add_flag("--all", all, "exhaust the agenda (default)");
  generate->add_option("--agenda", agenda, "agenda discipline")
      ->check(CLI::IsMember({"fifo", "lifo"}));
  generate->add_flag("--no-redundancy-check", no_redundancy,
                     "disable the duplicate-edge check (may diverge on "
                     "cyclic grammars)");
  generate->add_option("--max-edges", max_edges, "edge budget");

  CLI::App* translate = app.add_subcommand(
      "translate", "Parse, transfer through a bilingual lexicon, generate");
  translate
      ->add_option("-s,--source-grammar", src_grammar_path,
                   "source grammar (.sbg)")
      ->required();
  translate
      ->add_option("-t,--target-grammar", tgt_grammar_path,
                   "target grammar (.sbg)")
      ->required();
  translate
      ->add_option("-x,--bilingual", bilingual_path,
                   "bilingual lexicon (.sbx)")
      ->required();
  translate->add_option("sentence", sentence, "sentence words")->required();
  translate->add_option("--max-edges", max_edges, "edge budget");

  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time chart vs exhaustive baseline on the benchmark family");
  bench_cmd->add_option("--min", bench.min_size, "smallest bag size");
  bench_cmd->add_option("--max", bench.max_size, "largest bag size");
  bench_cmd->add_option("--reps", bench.reps, "repetitions per size");
  bench_cmd->add_option("--csv", csv_path, "CSV output path (default stdout)");
  bench_cmd->add_option("--max-edges", max_edges, "edge budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  sbgen::GenConfig config;
  config.discipline = discipline_from(agenda);
  config.redundancy_check = !no_redundancy;
  config.max_edges = max_edges;
  config.mode = first && !all ? sbgen::GenMode::kFirst : sbgen::GenMode::kAll;

  try {
    if (parse->parsed()) return cmd_parse(grammar_path, sentence);
    if (generate->parsed()) return cmd_generate(grammar_path, bag_path, config);
    if (translate->parsed()) {
      return cmd_translate(src_grammar_path, tgt_grammar_path, bilingual_path,
                           sentence, config);
    }
    if (bench_cmd->parsed()) {
      bench.gen.max_edges = max_edges;
      return cmd_bench(bench, csv_path);
    }
  } catch (const sbgen::BudgetExceededError& e) {
    std::cerr << "sbgen: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "sbgen: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
