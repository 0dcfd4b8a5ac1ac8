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

#include "sbgen/parser.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sbgen/error.hpp"
#include "sbgen/grammar_io.hpp"

namespace sbgen {

bool alpha_equal(const SpanEdge& a, const SpanEdge& b) {
  if (a.start != b.start || a.end != b.end || a.phrase != b.phrase)
    return false;
  if (a.found.size() != b.found.size()) return false;
  if (a.remaining.size() != b.remaining.size()) return false;
  if (a.leaves.size() != b.leaves.size()) return false;
  AlphaBijection bij;
  if (!alpha_match(bij, a.lhs, b.lhs)) return false;
  for (std::size_t i = 0; i < a.found.size(); ++i) {
    if (!alpha_match(bij, a.found[i], b.found[i])) return false;
  }
  for (std::size_t i = 0; i < a.remaining.size(); ++i) {
    if (!alpha_match(bij, a.remaining[i], b.remaining[i])) return false;
  }
  for (std::size_t i = 0; i < a.leaves.size(); ++i) {
    if (a.leaves[i].phon != b.leaves[i].phon) return false;
    if (!alpha_match(bij, a.leaves[i].category, b.leaves[i].category))
      return false;
  }
  return true;
}

std::string render_span_edge(const SpanEdge& e) {
  VarNamer names;
  std::string out =
      "<" + std::to_string(e.start) + "," + std::to_string(e.end) + ", ";
  out += render_category(e.lhs, names);
  out += " ->";
  for (const Category& c : e.found) {
    out += ' ';
    out += render_category(c, names);
  }
  out += " .";
  for (const Category& c : e.remaining) {
    out += ' ';
    out += render_category(c, names);
  }
  out += '>';
  return out;
}

namespace {

SpanEdge apply_edge(const Substitution& s, const SpanEdge& e) {
  SpanEdge out;
  out.start = e.start;
  out.end = e.end;
  out.lhs = apply(s, e.lhs);
  out.phrase = e.phrase;
  out.found.reserve(e.found.size());
  for (const Category& c : e.found) out.found.push_back(apply(s, c));
  out.remaining.reserve(e.remaining.size());
  for (const Category& c : e.remaining) out.remaining.push_back(apply(s, c));
  out.leaves.reserve(e.leaves.size());
  for (const Sign& leaf : e.leaves) {
    out.leaves.push_back(Sign{apply(s, leaf.category), leaf.phon});
  }
  return out;
}

SpanEdge rename_edge(const SpanEdge& e, FreshVars& fresh) {
  VarRenamer rename(fresh);
  SpanEdge out;
  out.start = e.start;
  out.end = e.end;
  out.lhs = rename(e.lhs);
  out.phrase = e.phrase;
  out.found.reserve(e.found.size());
  for (const Category& c : e.found) out.found.push_back(rename(c));
  out.remaining.reserve(e.remaining.size());
  for (const Category& c : e.remaining) out.remaining.push_back(rename(c));
  out.leaves.reserve(e.leaves.size());
  for (const Sign& leaf : e.leaves) {
    out.leaves.push_back(Sign{rename(leaf.category), leaf.phon});
  }
  return out;
}

SpanEdge combine(const Substitution& s, const SpanEdge& active,
                 const SpanEdge& inactive) {
  if (active.end != inactive.start) {
    throw std::logic_error("dot movement over non-adjacent spans");
  }
  SpanEdge joined;
  joined.start = active.start;
  joined.end = inactive.end;
  joined.lhs = active.lhs;
  joined.phrase = active.phrase;
  joined.phrase.insert(joined.phrase.end(), inactive.phrase.begin(),
                       inactive.phrase.end());
  joined.found = active.found;
  joined.found.push_back(inactive.lhs);
  joined.remaining.assign(active.remaining.begin() + 1,
                          active.remaining.end());
  joined.leaves = active.leaves;
  joined.leaves.insert(joined.leaves.end(), inactive.leaves.begin(),
                       inactive.leaves.end());
  return apply_edge(s, joined);
}

}  // namespace

ParseSession::ParseSession(const Grammar& grammar,
                           std::vector<std::string> words, ParseConfig config)
    : grammar_(grammar),
      config_(config),
      words_(std::move(words)),
      agenda_(config.discipline),
      fresh_(max_var(grammar) + 1) {
  if (words_.empty()) throw Error("parse: empty sentence");
  const int n = static_cast<int>(words_.size());
  inactive_starting_at_.resize(n + 1);
  active_ending_at_.resize(n + 1);

  std::vector<bool> covered(words_.size(), false);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (const Rule& rule : grammar_.rules) {
      if (!rule.lexical()) continue;
      const std::size_t len = rule.words.size();
      if (i + len > words_.size()) continue;
      if (!std::equal(rule.words.begin(), rule.words.end(),
                      words_.begin() + i)) {
        continue;
      }
      VarRenamer rename(fresh_);
      SpanEdge e;
      e.start = static_cast<int>(i);
      e.end = static_cast<int>(i + len);
      e.lhs = rename(rule.lhs);
      e.phrase = rule.words;
      e.leaves = {Sign{e.lhs, rule.words}};
      enqueue(std::move(e));
      for (std::size_t k = i; k < i + len; ++k) covered[k] = true;
    }
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!covered[i]) throw Error("unknown word: " + words_[i]);
  }
}

bool ParseSession::is_success(const SpanEdge& e) const {
  return e.inactive() && e.start == 0 &&
         e.end == static_cast<int>(words_.size()) &&
         e.lhs.functor == grammar_.start;
}

bool ParseSession::redundant(const SpanEdge& e) const {
  auto clash = [&e](const SpanEdge& other) {
    return other.start == e.start && other.end == e.end &&
           alpha_equal(other, e);
  };
  for (std::size_t i : e.inactive() ? inactive_starting_at_[e.start]
                                    : active_ending_at_[e.end]) {
    if (clash(chart_[i])) return true;
  }
  const auto& pending = agenda_.pending();
  return std::any_of(pending.begin(), pending.end(), clash);
}

bool ParseSession::enqueue(SpanEdge e) {
  if (config_.redundancy_check && redundant(e)) return false;
  ++edges_created_;
  if (edges_created_ > config_.max_edges) {
    throw BudgetExceededError(edges_created_, config_.max_edges);
  }
  agenda_.push(std::move(e));
  return true;
}

std::vector<SpanEdge> ParseSession::rule_invocation(const SpanEdge& inactive) {
  std::vector<SpanEdge> added;
  for (const Rule& rule : grammar_.rules) {
    if (rule.lexical()) continue;
    if (rule.rhs.front().functor != inactive.lhs.functor) continue;
    Rule r = standardize_apart(rule, fresh_);
    auto s = unify(r.rhs.front(), inactive.lhs);
    if (!s) continue;
    SpanEdge e;
    e.start = inactive.start;
    e.end = inactive.end;
    e.lhs = apply(*s, r.lhs);
    e.phrase = inactive.phrase;
    e.found = {apply(*s, inactive.lhs)};
    e.remaining.reserve(r.rhs.size() - 1);
    for (std::size_t i = 1; i < r.rhs.size(); ++i) {
      e.remaining.push_back(apply(*s, r.rhs[i]));
    }
    e.leaves.reserve(inactive.leaves.size());
    for (const Sign& leaf : inactive.leaves) {
      e.leaves.push_back(Sign{apply(*s, leaf.category), leaf.phon});
    }
    if (enqueue(e)) added.push_back(std::move(e));
  }
  return added;
}

std::vector<SpanEdge> ParseSession::dot_movement(const SpanEdge& e) {
  std::vector<SpanEdge> added;
  if (e.inactive()) {
    for (std::size_t i : active_ending_at_[e.start]) {
      const SpanEdge& active = chart_[i];
      if (active.expected().functor != e.lhs.functor) continue;
      SpanEdge partner = rename_edge(active, fresh_);
      auto s = unify(partner.expected(), e.lhs);
      if (!s) continue;
      SpanEdge joined = combine(*s, partner, e);
      if (enqueue(joined)) added.push_back(std::move(joined));
    }
  } else {
    for (std::size_t i : inactive_starting_at_[e.end]) {
      const SpanEdge& inactive = chart_[i];
      if (e.expected().functor != inactive.lhs.functor) continue;
      SpanEdge partner = rename_edge(inactive, fresh_);
      auto s = unify(e.expected(), partner.lhs);
      if (!s) continue;
      SpanEdge joined = combine(*s, e, partner);
      if (enqueue(joined)) added.push_back(std::move(joined));
    }
  }
  return added;
}

ParseResult ParseSession::run() {
  ParseResult result;
  while (auto popped = agenda_.pop()) {
    SpanEdge e = std::move(*popped);
    if (e.inactive()) {
      if (is_success(e)) {
        bool duplicate = false;
        for (const Analysis& a : result.analyses) {
          if (a.leaves.size() != e.leaves.size()) continue;
          AlphaBijection bij;
          bool same = alpha_match(bij, a.root, e.lhs);
          for (std::size_t i = 0; same && i < a.leaves.size(); ++i) {
            same = a.leaves[i].phon == e.leaves[i].phon &&
                   alpha_match(bij, a.leaves[i].category,
                               e.leaves[i].category);
          }
          if (same) duplicate = true;
        }
        if (!duplicate) result.analyses.push_back(Analysis{e.lhs, e.leaves});
      }
      rule_invocation(e);
    }
    dot_movement(e);
    if (e.inactive()) {
      inactive_starting_at_[e.start].push_back(chart_.size());
    } else {
      active_ending_at_[e.end].push_back(chart_.size());
    }
    chart_.push_back(std::move(e));
  }
  return result;
}

ParseResult parse(std::span<const std::string> words, const Grammar& grammar,
                  ParseConfig config) {
  ParseSession session(grammar,
                       std::vector<std::string>(words.begin(), words.end()),
                       config);
  return session.run();
}

Bag extract_bag(const ParseResult& result, std::size_t which) {
  if (which >= result.analyses.size()) {
    throw std::out_of_range("analysis index " + std::to_string(which) +
                            " out of range (" +
                            std::to_string(result.analyses.size()) +
                            " analyses)");
  }
  Bag bag;
  bag.signs = result.analyses[which].leaves;
  return bag;
}

std::vector<std::string> split_words(std::string_view sentence) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() &&
           std::isspace(static_cast<unsigned char>(sentence[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < sentence.size() &&
           !std::isspace(static_cast<unsigned char>(sentence[i]))) {
      ++i;
    }
    if (i > start) words.emplace_back(sentence.substr(start, i - start));
  }
  return words;
}

}  // namespace sbgen
