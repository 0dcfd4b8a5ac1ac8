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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Usage:
//
//   sbgen_acceptance <fixtures-dir> <sbgen-binary>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sbgen/bench.hpp"
#include "sbgen/error.hpp"
#include "sbgen/generator.hpp"
#include "sbgen/grammar_io.hpp"
#include "sbgen/oracle.hpp"
#include "sbgen/parser.hpp"
#include "sbgen/transfer.hpp"

namespace {

using namespace sbgen;
using Clock = std::chrono::steady_clock;

std::string g_fixtures;
std::string g_binary;

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixture(const std::string& name) { return g_fixtures + "/" + name; }

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CliResult{code, out};
}

std::set<std::string> lines_of(const std::string& text) {
  std::set<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.insert(line);
  }
  return lines;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::set<std::string> sentence_set(
    const std::vector<std::vector<std::string>>& sentences) {
  std::set<std::string> out;
  for (const auto& s : sentences) out.insert(join(s));
  return out;
}

// --- Fixture table for criteria 4, 5 and 7 --------------------------------

struct GenFixture {
  std::string name;
  Grammar grammar;
  Bag bag;
};

const char kClauseGrammar[] = R"(
start s.
rule s(X|P) -> np(X) vp(X|P).
rule vp(X,Y|P) -> v(X,Y|P) np(Y).
)";

const char kAdjGrammar[] = R"(
start s.
rule s(X|P) -> np(X) vp(X|P).
rule vp(X,Y|P) -> v(X,Y|P) np(Y).
rule np(X) -> adj(X) np(X).
)";

const char kCommutingAdvGrammar[] = R"(
start s.
rule s(X|P) -> np(X) vp(X|P).
rule vp(X,Y|P) -> v(X,Y|P) np(Y).
rule vp(X,Y|P) -> vp(X,Y|P) adv(X).
)";

const char kPpGrammar[] = R"(
start s.
rule s(X|P) -> np(X) vp(X|P).
rule vp(X,Y|P) -> v(X,Y|P) np(Y).
rule vp(X,Y|P) -> v(X,Y|P) pp(X,Y).
rule pp(X,Y) -> p(X,Y) np(Y).
)";

std::vector<GenFixture> generation_fixtures() {
  std::vector<GenFixture> fixtures;
  auto add = [&fixtures](const std::string& name, const std::string& grammar,
                         const std::string& bag) {
    fixtures.push_back(GenFixture{name, load_grammar_text(grammar, name),
                                  load_bag_text(bag, name)});
  };

  Grammar family = bench_grammar();
  for (int size = 3; size <= 7; ++size) {
    fixtures.push_back(GenFixture{"family-" + std::to_string(size), family,
                                  bench_bag(size)});
  }
  // Family bags with a duplicated chain link: the second copy can never
  // attach, so these are unsatisfiable.
  for (int size = 5; size <= 7; ++size) {
    Bag bag = bench_bag(size);
    bag.signs.back() = bag.signs[3];
    fixtures.push_back(
        GenFixture{"family-dup-" + std::to_string(size), family, bag});
  }

  add("clause", kClauseGrammar,
      "np(m) [\"Marie\"]\nnp(j) [\"Jean\"]\nv(j,m,l) [\"aime\"]\n");
  add("clause-swapped", kClauseGrammar,
      "np(m) [\"Marie\"]\nnp(j) [\"Jean\"]\nv(m,j,l) [\"aime\"]\n");
  add("clause-no-verb", kClauseGrammar,
      "np(m) [\"Marie\"]\nnp(j) [\"Jean\"]\nnp(p) [\"Pierre\"]\n");
  add("clause-self-loving", kClauseGrammar,
      "np(m) [\"Marie\"]\nnp(j) [\"Jean\"]\nv(j,j,l) [\"aime\"]\n");
  add("clause-multiword", kClauseGrammar,
      "np(m) [\"Marie\"]\nnp(j) [\"Jean\" \"Paul\"]\nv(j,m,l) [\"aime\"]\n");
  add("adjective-either-np", kAdjGrammar,
      "np(j) [\"John\"]\nnp(m) [\"Mary\"]\nv(j,m,l) [\"loves\"]\n"
      "adj(W) [\"young\"]\n");
  add("adjective-pinned", kAdjGrammar,
      "np(j) [\"John\"]\nnp(m) [\"Mary\"]\nv(j,m,l) [\"loves\"]\n"
      "adj(m) [\"young\"]\n");
  add("adjective-orphan", kAdjGrammar,
      "np(j) [\"John\"]\nnp(m) [\"Mary\"]\nv(j,m,l) [\"loves\"]\n"
      "adj(z) [\"young\"]\n");
  add("commuting-adverbs", kCommutingAdvGrammar,
      "np(j) [\"Jean\"]\nnp(m) [\"Marie\"]\nv(j,m,l) [\"aime\"]\n"
      "adv(j) [\"bien\"]\nadv(j) [\"fort\"]\n");
  add("pp-complement", kPpGrammar,
      "np(j) [\"Jean\"]\nv(m,j,e) [\"plaît\"]\np(m,j) [\"à\"]\n"
      "np(m) [\"Marie\"]\n");
  add("pp-orphan-prep", kPpGrammar,
      "np(j) [\"Jean\"]\nv(j,m,l) [\"aime\"]\np(z,w) [\"à\"]\n"
      "np(m) [\"Marie\"]\n");
  add("words-level", "start s.\n"
                     "rule s(X|P) -> np(X) vp(X|P).\n"
                     "rule vp(X,Y|P) -> v(X,Y|P) np(Y).\n"
                     "rule np(m) -> marie(m).\n"
                     "rule np(j) -> jean(j).\n"
                     "rule v(X,Y,l) -> aime(X,Y,l).\n",
      "marie(m) [\"Marie\"]\njean(j) [\"Jean\"]\naime(j,m,l) [\"aime\"]\n");

  return fixtures;
}

// Synthesized lexical entries let the parser read back what the generator
// wrote: one lex rule per distinct bag sign.
Grammar reparse_grammar(const GenFixture& fx) {
  Grammar g = fx.grammar;
  for (const Sign& sign : fx.bag.signs) {
    bool present = false;
    for (const Rule& r : g.rules) {
      if (r.lexical() && r.words == sign.phon &&
          alpha_equal(r.lhs, sign.category)) {
        present = true;
      }
    }
    if (present) continue;
    Rule lex;
    lex.lhs = sign.category;
    lex.words = sign.phon;
    g.rules.push_back(std::move(lex));
  }
  return g;
}

// Perfect matching between analysis leaves and bag signs where each pair of
// categories unifies.
bool leaves_cover_bag(const std::vector<Sign>& leaves, const Bag& bag) {
  if (leaves.size() != bag.size()) return false;
  std::vector<bool> used(bag.size(), false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == leaves.size()) return true;
    for (std::size_t k = 0; k < bag.size(); ++k) {
      if (used[k]) continue;
      if (!unify(leaves[i].category, bag.signs[k].category)) continue;
      used[k] = true;
      if (assign(i + 1)) return true;
      used[k] = false;
    }
    return false;
  };
  return assign(0);
}

// --- Criterion 1 -----------------------------------------------------------

void criterion_worked_example() {
  auto start = Clock::now();
  Grammar g = load_grammar_file(fixture("french_words.sbg"));
  Bag bag = load_bag_file(fixture("jean_aime_marie.sbb"));

  GenConfig cfg;
  cfg.discipline = AgendaDiscipline::kFifo;
  cfg.redundancy_check = true;
  GenSession session(g, bag, cfg);

  auto edge = [](std::initializer_list<int> nodes, const std::string& lhs,
                 std::vector<std::string> found,
                 std::vector<std::string> remaining,
                 const std::string& phrase) {
    // Rebuild through one rule statement so shared tails stay shared.
    std::string stmt = "rule " + lhs + " ->";
    for (const auto& c : found) stmt += " " + c;
    for (const auto& c : remaining) stmt += " " + c;
    stmt += ".";
    Rule r = parse_rule_text(stmt);
    Edge e;
    e.nodes = NodeSet::encode(nodes);
    e.lhs = r.lhs;
    e.found.assign(r.rhs.begin(), r.rhs.begin() + found.size());
    e.remaining.assign(r.rhs.begin() + found.size(), r.rhs.end());
    e.phrase = split_words(phrase);
    return e;
  };

  const std::vector<Edge> expect = {
      edge({1}, "marie(m)", {"marie(m)"}, {}, "Marie"),
      edge({2}, "jean(j)", {"jean(j)"}, {}, "Jean"),
      edge({3}, "aime(j,m,l)", {"aime(j,m,l)"}, {}, "aime"),
      edge({1}, "np(m)", {"marie(m)"}, {}, "Marie"),
      edge({2}, "np(j)", {"jean(j)"}, {}, "Jean"),
      edge({3}, "v(j,m,l)", {"aime(j,m,l)"}, {}, "aime"),
      edge({1}, "s(m|P)", {"np(m)"}, {"vp(m|P)"}, "Marie"),
      edge({2}, "s(j|P)", {"np(j)"}, {"vp(j|P)"}, "Jean"),
      edge({3}, "vp(j,m,l)", {"v(j,m,l)"}, {"np(m)"}, "aime"),
      edge({1, 3}, "vp(j,m,l)", {"v(j,m,l)", "np(m)"}, {}, "aime Marie"),
      edge({1, 2, 3}, "s(j,m,l)", {"np(j)", "vp(j,m,l)"}, {},
           "Jean aime Marie"),
  };

  // Initialization yields the three sign edges.
  const auto& pending = session.agenda().pending();
  require(pending.size() == 3, "initialization should seed 3 edges");
  for (int i = 0; i < 3; ++i) {
    require(alpha_equal(pending[i], expect[i]),
            "initial edge " + std::to_string(i + 1) + " mismatch: " +
                render_edge(pending[i]));
  }

  auto sentences = session.run();
  require(sentence_set(sentences) == std::set<std::string>{"Jean aime Marie"},
          "derivation should yield exactly 'Jean aime Marie'");

  const Chart& chart = session.chart();
  require(chart.size() == expect.size(),
          "chart should hold exactly " + std::to_string(expect.size()) +
              " edges, got " + std::to_string(chart.size()));
  for (const Edge& want : expect) {
    int hits = 0;
    for (const Edge& got : chart.edges()) {
      if (alpha_equal(got, want)) ++hits;
    }
    require(hits == 1, "expected exactly one chart edge matching " +
                           render_edge(want));
  }

  // The two index-clash combinations stay blocked.
  require(!unify(parse_category_text("vp(m|P)"),
                 parse_category_text("vp(j,m,l)")),
          "vp(m|P) must not unify with vp(j,m,l)");
  require(!unify(parse_category_text("np(m)"), parse_category_text("np(j)")),
          "np(m) must not unify with np(j)");
  for (const Edge& e : chart.edges()) {
    require(e.nodes != NodeSet::encode({2, 3}),
            "no edge may cover exactly {Jean, aime}");
  }

  require(seconds_since(start) < 1.0, "worked example exceeded 1 second");
}

// --- Criterion 2 -----------------------------------------------------------

void criterion_pipeline() {
  CliResult r = run_cli("translate -s " + fixture("english.sbg") + " -t " +
                        fixture("french.sbg") + " -x " +
                        fixture("english_french.sbx") + " John loves Mary");
  require(r.exit_code == 0, "translate exited " + std::to_string(r.exit_code));
  require(lines_of(r.out) == std::set<std::string>{"Jean aime Marie"},
          "translate output was: " + r.out);
  require(r.out.find("Marie aime Jean") == std::string::npos,
          "the swapped-argument sentence must never be produced");

  // Same check through the library, to pin the string set exactly.
  Grammar en = load_grammar_file(fixture("english.sbg"));
  Grammar fr = load_grammar_file(fixture("french.sbg"));
  auto lexicon = load_bilingual_file(fixture("english_french.sbx"));
  ParseResult parsed = parse(split_words("John loves Mary"), en);
  require(parsed.analyses.size() == 1, "one English analysis expected");
  TransferResult transferred = transfer(extract_bag(parsed, 0), lexicon);
  require(transferred.bags.size() == 1, "one target bag expected");
  GenResult gen = generate(transferred.bags[0].bag, fr);
  require(sentence_set(gen.sentences) ==
              std::set<std::string>{"Jean aime Marie"},
          "generation must yield exactly the French sentence");
}

// --- Criterion 3 -----------------------------------------------------------

void criterion_index_reversal() {
  Grammar en = load_grammar_file(fixture("english.sbg"));
  Grammar fr = load_grammar_file(fixture("french_extended.sbg"));
  auto lexicon = load_bilingual_file(fixture("english_french_extended.sbx"));

  ParseResult parsed = parse(split_words("John likes Mary"), en);
  require(parsed.analyses.size() == 1, "one English analysis expected");
  TransferResult transferred = transfer(extract_bag(parsed, 0), lexicon);
  require(transferred.bags.size() == 1, "one target bag expected");

  const Bag& bag = transferred.bags[0].bag;
  bool found_plait = false;
  for (const Sign& sign : bag.signs) {
    if (sign.phon == std::vector<std::string>{"plaît"}) {
      found_plait = true;
      require(sign.category == parse_category_text("v(m,j,e)"),
              "plaît must carry (m,j,e), got " +
                  render_category(sign.category));
    }
  }
  require(found_plait, "target bag must contain plaît");

  GenResult gen = generate(bag, fr);
  require(sentence_set(gen.sentences) ==
              std::set<std::string>{"Marie plaît à Jean"},
          "generation must yield exactly 'Marie plaît à Jean'");

  CliResult r = run_cli("translate -s " + fixture("english.sbg") + " -t " +
                        fixture("french_extended.sbg") + " -x " +
                        fixture("english_french_extended.sbx") +
                        " John likes Mary");
  require(r.exit_code == 0, "translate exited " + std::to_string(r.exit_code));
  require(lines_of(r.out) == std::set<std::string>{"Marie plaît à Jean"},
          "translate output was: " + r.out);
}

// --- Criterion 4 -----------------------------------------------------------

void criterion_oracle_equivalence() {
  auto start = Clock::now();
  auto fixtures = generation_fixtures();
  require(fixtures.size() >= 20, "need at least 20 fixtures, have " +
                                     std::to_string(fixtures.size()));
  int unsatisfiable = 0;
  for (const GenFixture& fx : fixtures) {
    require(fx.bag.size() >= 3 && fx.bag.size() <= 7,
            fx.name + ": bag size out of the 3..7 range");
    GenResult chart = generate(fx.bag, fx.grammar);
    OracleRun oracle = oracle_generate_all(fx.bag, fx.grammar);
    auto chart_set = sentence_set(chart.sentences);
    auto oracle_set = sentence_set(oracle.sentences);
    require(chart_set == oracle_set,
            fx.name + ": chart and oracle sets differ");
    if (chart_set.empty()) ++unsatisfiable;
  }
  require(unsatisfiable >= 4, "fixture set should include unsatisfiable bags");
  require(seconds_since(start) < 30.0, "oracle equivalence exceeded 30 s");
}

// --- Criterion 5 -----------------------------------------------------------

void criterion_reparse_soundness() {
  auto fixtures = generation_fixtures();
  int sentences_checked = 0;
  for (const GenFixture& fx : fixtures) {
    GenResult gen = generate(fx.bag, fx.grammar);
    if (gen.sentences.empty()) continue;
    Grammar reparser = reparse_grammar(fx);
    for (const auto& sentence : gen.sentences) {
      ParseResult parsed = parse(sentence, reparser);
      require(parsed.accepted(),
              fx.name + ": generated sentence does not re-parse: " +
                  join(sentence));
      bool covered = false;
      for (std::size_t i = 0; i < parsed.analyses.size(); ++i) {
        if (leaves_cover_bag(parsed.analyses[i].leaves, fx.bag)) {
          covered = true;
          break;
        }
      }
      require(covered, fx.name + ": no analysis of '" + join(sentence) +
                           "' consumes the full bag");
      ++sentences_checked;
    }
  }
  require(sentences_checked >= 10, "too few sentences exercised");
}

// --- Criterion 6 -----------------------------------------------------------

void criterion_bitstring_laws() {
  require(NodeSet::encode({2, 4, 5}).bits() == 26, "{2,4,5} must encode to 26");
  require(NodeSet::encode({1, 2, 3}).bits() == 7, "{1,2,3} must encode to 7");

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> npos(0, 14);
  std::uniform_int_distribution<int> pos(1, 20);
  for (int iter = 0; iter < 10000; ++iter) {
    std::set<int> sa, sb;
    int na = npos(rng), nb = npos(rng);
    for (int i = 0; i < na; ++i) sa.insert(pos(rng));
    for (int i = 0; i < nb; ++i) sb.insert(pos(rng));
    std::vector<int> va(sa.begin(), sa.end()), vb(sb.begin(), sb.end());
    NodeSet a = NodeSet::encode(va);
    NodeSet b = NodeSet::encode(vb);

    std::set<int> su = sa;
    su.insert(sb.begin(), sb.end());
    std::vector<int> vu(su.begin(), su.end());
    require(a.united(b) == NodeSet::encode(vu), "union law violated");

    bool disjoint = true;
    for (int x : sa) {
      if (sb.count(x)) disjoint = false;
    }
    require(a.disjoint_with(b) == disjoint, "disjointness law violated");
    require(a.count() == static_cast<int>(sa.size()), "popcount mismatch");
  }
}

// --- Criterion 7 -----------------------------------------------------------

void criterion_hypothesis_uniqueness() {
  for (const GenFixture& fx : generation_fixtures()) {
    GenConfig cfg;
    cfg.redundancy_check = true;
    GenSession session(fx.grammar, fx.bag, cfg);
    session.run();
    const Chart& chart = session.chart();
    for (std::size_t i = 0; i < chart.size(); ++i) {
      for (std::size_t k = i + 1; k < chart.size(); ++k) {
        if (chart.at(i).nodes != chart.at(k).nodes) continue;
        require(!alpha_equal(chart.at(i), chart.at(k)),
                fx.name + ": duplicate hypothesis " +
                    render_edge(chart.at(i)));
      }
    }
  }
}

// --- Criterion 8 -----------------------------------------------------------

void criterion_performance_shape() {
  BenchOptions opt;
  opt.min_size = 3;
  opt.max_size = 11;
  opt.reps = 5;
  auto rows = run_bench(opt);

  auto rows_for = [&rows](int size, const std::string& mode) {
    std::vector<BenchRow> out;
    for (const BenchRow& r : rows) {
      if (r.size == size && r.mode == mode) out.push_back(r);
    }
    return out;
  };
  auto median_seconds = [&rows_for](int size, const std::string& mode) {
    auto subset = rows_for(size, mode);
    std::vector<double> times;
    for (const BenchRow& r : subset) times.push_back(r.seconds);
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };

  long long prev_baseline = -1;
  for (int size = 3; size <= 11; ++size) {
    auto baseline = rows_for(size, "baseline-all");
    auto chart = rows_for(size, "chart-all");
    require(!baseline.empty() && !chart.empty(), "missing bench rows");
    require(baseline[0].sentences == 1 && chart[0].sentences == 1,
            "family bags must stay single-sentence");
    require(baseline[0].expansions > prev_baseline,
            "baseline expansions must grow strictly with size");
    prev_baseline = baseline[0].expansions;
    if (size >= 5) {
      require(baseline[0].expansions > chart[0].expansions,
              "baseline must exceed chart edges at size " +
                  std::to_string(size));
    }
  }

  double chart_all_11 = median_seconds(11, "chart-all");
  double baseline_all_11 = median_seconds(11, "baseline-all");
  require(chart_all_11 < baseline_all_11,
          "chart-all must be faster than baseline-all at size 11 (" +
              std::to_string(chart_all_11) + " vs " +
              std::to_string(baseline_all_11) + ")");

  double chart_first_11 = median_seconds(11, "chart-first");
  require(chart_first_11 < 5.0, "chart-first at size 11 must finish in <5s");
}

// --- Criterion 9 -----------------------------------------------------------

void criterion_termination_guard() {
  CliResult off = run_cli("generate -g " + fixture("cycle.sbg") + " -b " +
                          fixture("cycle.sbb") +
                          " --no-redundancy-check --max-edges 50000");
  require(off.exit_code == 3,
          "budget must trip with exit 3, got " + std::to_string(off.exit_code));

  CliResult on = run_cli("generate -g " + fixture("cycle.sbg") + " -b " +
                         fixture("cycle.sbb"));
  require(on.exit_code == 0,
          "redundancy on must terminate normally, got exit " +
              std::to_string(on.exit_code));
  require(lines_of(on.out) == std::set<std::string>{"w"},
          "cyclic grammar should still emit its one sentence");
}

struct Criterion {
  const char* name;
  void (*fn)();
};

const Criterion kCriteria[] = {
    {"worked-example fidelity (three-sign derivation, 11-edge chart)",
     criterion_worked_example},
    {"end-to-end pipeline: John loves Mary -> Jean aime Marie",
     criterion_pipeline},
    {"index-reversal transfer: likes -> plaît + à", criterion_index_reversal},
    {"oracle equivalence on 20+ bags of size 3..7",
     criterion_oracle_equivalence},
    {"soundness by re-parsing every generated sentence",
     criterion_reparse_soundness},
    {"bitstring laws over 10,000 random position-set pairs",
     criterion_bitstring_laws},
    {"hypothesis uniqueness audit of every chart",
     criterion_hypothesis_uniqueness},
    {"performance shape on family sizes 3..11", criterion_performance_shape},
    {"termination guard: budget trip vs redundancy check",
     criterion_termination_guard},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: sbgen_acceptance <fixtures-dir> <sbgen-binary>\n";
    return 2;
  }
  g_fixtures = argv[1];
  g_binary = argv[2];

  int failures = 0;
  int index = 0;
  for (const Criterion& c : kCriteria) {
    ++index;
    try {
      c.fn();
      std::cout << "[PASS] " << index << ". " << c.name << "\n";
    } catch (const CheckFailure& f) {
      std::cout << "[FAIL] " << index << ". " << c.name << ": " << f.message
                << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << index << ". " << c.name
                << ": unexpected error: " << e.what() << "\n";
      ++failures;
    }
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all " << index << " criteria passed\n";
  return 0;
}
