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

#include "sbgen/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "sbgen/error.hpp"

namespace sbgen {

namespace {

// The found constituent recorded for a combination is the inactive side's
// left hand side; under the unifier it equals the consumed expectation.
Edge combine(const Substitution& s, const Edge& active, const Edge& inactive) {
  if (!active.nodes.disjoint_with(inactive.nodes)) {
    throw std::logic_error("dot movement over intersecting node sets");
  }
  Edge out;
  out.nodes = active.nodes.united(inactive.nodes);
  out.lhs = apply(s, active.lhs);
  out.phrase = active.phrase;
  out.phrase.insert(out.phrase.end(), inactive.phrase.begin(),
                    inactive.phrase.end());
  out.found.reserve(active.found.size() + 1);
  for (const Category& c : active.found) out.found.push_back(apply(s, c));
  out.found.push_back(apply(s, inactive.lhs));
  out.remaining.reserve(active.remaining.size() - 1);
  for (std::size_t i = 1; i < active.remaining.size(); ++i) {
    out.remaining.push_back(apply(s, active.remaining[i]));
  }
  return out;
}

}  // namespace

GenSession::GenSession(const Grammar& grammar, const Bag& bag,
                       GenConfig config)
    : grammar_(grammar),
      config_(config),
      agenda_(config.discipline),
      fresh_(std::max(max_var(grammar), max_var(bag)) + 1) {
  if (bag.signs.empty()) throw Error("generate: empty bag");
  all_bits_ = NodeSet::full(static_cast<int>(bag.size()));
  for (std::size_t i = 0; i < bag.signs.size(); ++i) {
    const Sign& sign = bag.signs[i];
    Edge e;
    e.nodes = NodeSet::single(static_cast<int>(i) + 1);
    e.lhs = sign.category;
    e.phrase = sign.phon;
    e.found = {sign.category};
    enqueue(std::move(e));
  }
}

bool GenSession::is_success(const Edge& e) const {
  return e.inactive() && e.nodes == all_bits_ &&
         e.lhs.functor == grammar_.start;
}

bool GenSession::enqueue(Edge e) {
  if (!e.nodes.disjoint_with(NodeSet(~all_bits_.bits()))) {
    throw std::logic_error("edge node set outside the bag");
  }
  if (config_.redundancy_check && is_redundant(chart_, agenda_, e)) {
    ++stats_.redundant_dropped;
    return false;
  }
  ++stats_.edges_created;
  if (stats_.edges_created > config_.max_edges) {
    throw BudgetExceededError(stats_.edges_created, config_.max_edges);
  }
  agenda_.push(std::move(e));
  return true;
}

std::vector<Edge> GenSession::rule_invocation(const Edge& inactive) {
  std::vector<Edge> added;
  for (const Rule& rule : grammar_.rules) {
    if (rule.lexical()) continue;
    if (rule.rhs.front().functor != inactive.lhs.functor) continue;
    Rule r = standardize_apart(rule, fresh_);
    auto s = unify(r.rhs.front(), inactive.lhs);
    if (!s) continue;
    Edge e;
    e.nodes = inactive.nodes;
    e.lhs = apply(*s, r.lhs);
    e.phrase = inactive.phrase;
    e.found = {apply(*s, inactive.lhs)};
    e.remaining.reserve(r.rhs.size() - 1);
    for (std::size_t i = 1; i < r.rhs.size(); ++i) {
      e.remaining.push_back(apply(*s, r.rhs[i]));
    }
    if (enqueue(e)) added.push_back(std::move(e));
  }
  return added;
}

std::vector<Edge> GenSession::combine_against_chart(const Edge& popped) {
  std::vector<Edge> added;
  if (popped.inactive()) {
    for (std::size_t i : chart_.active_expecting(popped.lhs.functor)) {
      const Edge& active = chart_.at(i);
      if (!active.nodes.disjoint_with(popped.nodes)) continue;
      Edge partner = standardize_apart(active, fresh_);
      auto s = unify(partner.expected(), popped.lhs);
      if (!s) continue;
      Edge e = combine(*s, partner, popped);
      if (enqueue(e)) added.push_back(std::move(e));
    }
  } else {
    for (std::size_t i : chart_.inactive_with_lhs(popped.expected().functor)) {
      const Edge& inactive = chart_.at(i);
      if (!inactive.nodes.disjoint_with(popped.nodes)) continue;
      Edge partner = standardize_apart(inactive, fresh_);
      auto s = unify(popped.expected(), partner.lhs);
      if (!s) continue;
      Edge e = combine(*s, popped, partner);
      if (enqueue(e)) added.push_back(std::move(e));
    }
  }
  return added;
}

std::vector<Edge> GenSession::dot_movement(const Edge& e) {
  return combine_against_chart(e);
}

std::vector<std::vector<std::string>> GenSession::run() {
  std::vector<std::vector<std::string>> sentences;
  std::set<std::vector<std::string>> seen;
  while (auto popped = agenda_.pop()) {
    if (popped->inactive()) {
      if (is_success(*popped)) {
        ++stats_.derivations;
        if (seen.insert(popped->phrase).second) {
          sentences.push_back(popped->phrase);
        }
        if (config_.mode == GenMode::kFirst) return sentences;
      }
      rule_invocation(*popped);
    }
    dot_movement(*popped);
    chart_.insert(std::move(*popped));
    ++stats_.edges_in_chart;
  }
  return sentences;
}

GenResult generate(const Bag& bag, const Grammar& grammar,
                   const GenConfig& config) {
  GenSession session(grammar, bag, config);
  GenResult result;
  result.sentences = session.run();
  result.stats = session.stats();
  return result;
}

}  // namespace sbgen
