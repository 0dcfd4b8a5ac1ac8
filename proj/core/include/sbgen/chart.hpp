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

#ifndef SBGEN_CHART_HPP_
#define SBGEN_CHART_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sbgen/grammar.hpp"
#include "sbgen/term.hpp"

namespace sbgen {

// A subset of bag positions encoded as a bitstring: bit i-1 is set iff
// position i (1-based) is covered. Union is bitwise OR; two sets are
// disjoint iff the bitwise AND is zero.
class NodeSet {
 public:
  static constexpr int kMaxBits = 64;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

  // Encode a set of 1-based positions; throws on positions outside 1..64.
  static NodeSet encode(std::span<const int> positions);
  static NodeSet encode(std::initializer_list<int> positions);
  static NodeSet single(int position);

  // All positions 1..n set; throws when n is outside 1..64.
  static NodeSet full(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool disjoint_with(NodeSet other) const {
    return (bits_ & other.bits_) == 0;
  }
  constexpr NodeSet united(NodeSet other) const {
    return NodeSet(bits_ | other.bits_);
  }
  constexpr bool contains(int position) const {
    return (bits_ >> (position - 1)) & 1u;
  }
  int count() const;

  constexpr bool operator==(const NodeSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// A dotted-rule item over a node set. The constituents already found sit in
// `found`, the expectations in `remaining`; an edge with no expectations is
// inactive. `phrase` is the surface string assembled so far, in rule order.
struct Edge {
  NodeSet nodes;
  Category lhs;
  std::vector<std::string> phrase;
  std::vector<Category> found;
  std::vector<Category> remaining;

  bool inactive() const { return remaining.empty(); }
  const Category& expected() const { return remaining.front(); }

  // The functor the chart indexes this edge under: the left hand side for
  // inactive edges, the first expectation for active ones.
  const std::string& index_key() const {
    return inactive() ? lhs.functor : remaining.front().functor;
  }
};

Edge apply(const Substitution& s, const Edge& e);
Edge standardize_apart(const Edge& e, FreshVars& fresh);

// Identical up to one bijective variable renaming across all categories of
// the edge; node sets, phrases and dot positions must match exactly.
bool alpha_equal(const Edge& a, const Edge& b);

std::string render_edge(const Edge& e);

// Processed edges, indexed by functor so dot movement only examines
// plausible partners: inactive edges under their left-hand-side functor,
// active edges under the functor of the category right of the dot.
class Chart {
 public:
  void insert(Edge e);

  std::size_t size() const { return edges_.size(); }
  const Edge& at(std::size_t i) const { return edges_[i]; }
  const std::deque<Edge>& edges() const { return edges_; }

  // Indices of stored edges, by kind and functor key.
  std::span<const std::size_t> inactive_with_lhs(const std::string& f) const;
  std::span<const std::size_t> active_expecting(const std::string& f) const;

 private:
  std::deque<Edge> edges_;
  std::unordered_map<std::string, std::vector<std::size_t>> inactive_;
  std::unordered_map<std::string, std::vector<std::size_t>> active_;
};

enum class AgendaDiscipline { kFifo, kLifo };

// Worklist of edges not yet added to the chart. FIFO gives breadth-first
// search, LIFO depth-first. Shared between the generator and the parser.
template <typename E>
class BasicAgenda {
 public:
  explicit BasicAgenda(AgendaDiscipline d = AgendaDiscipline::kFifo)
      : mode_(d) {}

  void push(E e) { items_.push_back(std::move(e)); }

  std::optional<E> pop() {
    if (items_.empty()) return std::nullopt;
    E e;
    if (mode_ == AgendaDiscipline::kFifo) {
      e = std::move(items_.front());
      items_.pop_front();
    } else {
      e = std::move(items_.back());
      items_.pop_back();
    }
    return e;
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::deque<E>& pending() const { return items_; }

 private:
  AgendaDiscipline mode_;
  std::deque<E> items_;
};

using Agenda = BasicAgenda<Edge>;

// True iff an alpha-equal edge with the same node set is already stored in
// the chart or waiting in the agenda.
bool is_redundant(const Chart& chart, const Agenda& agenda, const Edge& e);

}  // namespace sbgen

#endif  // SBGEN_CHART_HPP_
