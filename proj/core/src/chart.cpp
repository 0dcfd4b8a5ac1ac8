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

#include "sbgen/chart.hpp"

#include <bit>
#include <stdexcept>

#include "sbgen/grammar_io.hpp"

namespace sbgen {

NodeSet NodeSet::encode(std::span<const int> positions) {
  std::uint64_t bits = 0;
  for (int p : positions) {
    if (p < 1 || p > kMaxBits) {
      throw std::out_of_range("node position " + std::to_string(p) +
                              " outside 1.." + std::to_string(kMaxBits));
    }
    bits |= std::uint64_t{1} << (p - 1);
  }
  return NodeSet(bits);
}

NodeSet NodeSet::encode(std::initializer_list<int> positions) {
  return encode(std::span<const int>(positions.begin(), positions.size()));
}

NodeSet NodeSet::single(int position) {
  const int p[] = {position};
  return encode(p);
}

NodeSet NodeSet::full(int n) {
  if (n < 1 || n > kMaxBits) {
    throw std::out_of_range("bag size " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxBits));
  }
  if (n == kMaxBits) return NodeSet(~std::uint64_t{0});
  return NodeSet((std::uint64_t{1} << n) - 1);
}

int NodeSet::count() const { return std::popcount(bits_); }

Edge apply(const Substitution& s, const Edge& e) {
  Edge out;
  out.nodes = e.nodes;
  out.lhs = apply(s, e.lhs);
  out.phrase = e.phrase;
  out.found.reserve(e.found.size());
  for (const Category& c : e.found) out.found.push_back(apply(s, c));
  out.remaining.reserve(e.remaining.size());
  for (const Category& c : e.remaining) out.remaining.push_back(apply(s, c));
  return out;
}

Edge standardize_apart(const Edge& e, FreshVars& fresh) {
  VarRenamer rename(fresh);
  Edge out;
  out.nodes = e.nodes;
  out.lhs = rename(e.lhs);
  out.phrase = e.phrase;
  out.found.reserve(e.found.size());
  for (const Category& c : e.found) out.found.push_back(rename(c));
  out.remaining.reserve(e.remaining.size());
  for (const Category& c : e.remaining) out.remaining.push_back(rename(c));
  return out;
}

bool alpha_equal(const Edge& a, const Edge& b) {
  if (a.nodes != b.nodes || a.phrase != b.phrase) return false;
  if (a.found.size() != b.found.size()) return false;
  if (a.remaining.size() != b.remaining.size()) return false;
  AlphaBijection bij;
  if (!alpha_match(bij, a.lhs, b.lhs)) return false;
  for (std::size_t i = 0; i < a.found.size(); ++i) {
    if (!alpha_match(bij, a.found[i], b.found[i])) return false;
  }
  for (std::size_t i = 0; i < a.remaining.size(); ++i) {
    if (!alpha_match(bij, a.remaining[i], b.remaining[i])) return false;
  }
  return true;
}

std::string render_edge(const Edge& e) {
  VarNamer names;
  std::string out = "<{";
  bool first = true;
  for (int p = 1; p <= NodeSet::kMaxBits; ++p) {
    if (!e.nodes.contains(p)) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(p);
  }
  out += "}, ";
  out += render_category(e.lhs, names);
  out += '[';
  first = true;
  for (const std::string& w : e.phrase) {
    if (!first) out += ' ';
    first = false;
    out += w;
  }
  out += "] ->";
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

void Chart::insert(Edge e) {
  auto& index = e.inactive() ? inactive_ : active_;
  index[e.index_key()].push_back(edges_.size());
  edges_.push_back(std::move(e));
}

namespace {
const std::vector<std::size_t> kNoEdges;
}

std::span<const std::size_t> Chart::inactive_with_lhs(
    const std::string& f) const {
  auto it = inactive_.find(f);
  return it == inactive_.end() ? std::span<const std::size_t>()
                               : std::span<const std::size_t>(it->second);
}

std::span<const std::size_t> Chart::active_expecting(
    const std::string& f) const {
  auto it = active_.find(f);
  return it == active_.end() ? std::span<const std::size_t>()
                             : std::span<const std::size_t>(it->second);
}

bool is_redundant(const Chart& chart, const Agenda& agenda, const Edge& e) {
  auto candidates = e.inactive() ? chart.inactive_with_lhs(e.index_key())
                                 : chart.active_expecting(e.index_key());
  for (std::size_t i : candidates) {
    const Edge& other = chart.at(i);
    if (other.nodes == e.nodes && alpha_equal(other, e)) return true;
  }
  for (const Edge& other : agenda.pending()) {
    if (other.nodes == e.nodes && other.inactive() == e.inactive() &&
        alpha_equal(other, e)) {
      return true;
    }
  }
  return false;
}

}  // namespace sbgen
