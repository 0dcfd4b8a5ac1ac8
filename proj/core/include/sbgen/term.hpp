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

#ifndef SBGEN_TERM_HPP_
#define SBGEN_TERM_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sbgen {

using VarId = std::uint32_t;

// One element of a semantic-index list: a ground atom (lowercase in the
// surface syntax) or a variable (uppercase).
struct IndexTerm {
  enum class Kind : std::uint8_t { kAtom, kVar };

  Kind kind = Kind::kAtom;
  std::string name;  // atom spelling; empty for variables
  VarId var = 0;     // variable id; 0 for atoms

  static IndexTerm atom(std::string n);
  static IndexTerm variable(VarId v);

  bool is_atom() const { return kind == Kind::kAtom; }
  bool is_var() const { return kind == Kind::kVar; }

  bool operator==(const IndexTerm&) const = default;
};

// A possibly open-ended list of index terms. A closed list has no tail; an
// open list ends in a tail variable that may later bind to a further list,
// which is how two categories share "the rest of the indices".
struct IndexList {
  std::vector<IndexTerm> items;
  std::optional<VarId> tail;

  bool closed() const { return !tail.has_value(); }
  bool operator==(const IndexList&) const = default;
};

// A grammar symbol: functor plus semantic-index list.
struct Category {
  std::string functor;
  IndexList indices;

  bool operator==(const Category&) const = default;
};

// Source of fresh variable ids for one derivation session.
class FreshVars {
 public:
  explicit FreshVars(VarId first = 1) : next_(first) {}

  VarId fresh() { return next_++; }
  VarId peek() const { return next_; }

 private:
  VarId next_;
};

// A variable binds either to a single index term or, for tail variables, to
// the remainder of an index list.
using Binding = std::variant<IndexTerm, IndexList>;

// An idempotent substitution: bindings are composed eagerly, so applying a
// substitution twice gives the same result as applying it once, and no bound
// variable occurs in any binding value (occurs check).
class Substitution {
 public:
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  const Binding* lookup(VarId v) const;

  // Extend with v -> value. The value is first instantiated against the
  // current bindings, then substituted into them. Returns false (leaving the
  // substitution unchanged) when the extension would violate the occurs
  // check or clash with the variable's role.
  bool bind_term(VarId v, IndexTerm value);
  bool bind_list(VarId v, IndexList value);

  const std::map<VarId, Binding>& bindings() const { return map_; }

  bool operator==(const Substitution&) const = default;

 private:
  std::map<VarId, Binding> map_;
};

IndexTerm apply(const Substitution& s, const IndexTerm& t);
IndexList apply(const Substitution& s, const IndexList& l);
Category apply(const Substitution& s, const Category& c);

// Most general unifier of two categories; empty optional on mismatch.
// Functors are constants, so they must be equal outright.
std::optional<Substitution> unify(const Category& a, const Category& b);

// Unification threaded through an existing substitution: the result extends
// `base` and unifies `a` with `b` under it. Used wherever bindings accumulate
// across several constituents.
std::optional<Substitution> unify(const Substitution& base, const Category& a,
                                  const Category& b);
std::optional<Substitution> unify_lists(const Substitution& base,
                                        const IndexList& a, const IndexList& b);

// Incrementally checked bijection between the variables of two structures;
// the workhorse behind alpha-equality.
class AlphaBijection {
 public:
  bool match(VarId a, VarId b);

 private:
  std::unordered_map<VarId, VarId> fwd_;
  std::unordered_map<VarId, VarId> rev_;
};

bool alpha_match(AlphaBijection& bij, const IndexTerm& a, const IndexTerm& b);
bool alpha_match(AlphaBijection& bij, const IndexList& a, const IndexList& b);
bool alpha_match(AlphaBijection& bij, const Category& a, const Category& b);

// True iff a and b are identical up to a bijective renaming of variables.
bool alpha_equal(const Category& a, const Category& b);

// Consistent fresh renaming across any number of categories; renaming the
// same renamer over several parts of a rule or edge keeps shared variables
// shared.
class VarRenamer {
 public:
  explicit VarRenamer(FreshVars& fresh) : fresh_(fresh) {}

  IndexTerm operator()(const IndexTerm& t);
  IndexList operator()(const IndexList& l);
  Category operator()(const Category& c);

 private:
  FreshVars& fresh_;
  std::unordered_map<VarId, VarId> map_;
};

// Largest variable id occurring in the structure; 0 when ground.
VarId max_var(const IndexList& l);
VarId max_var(const Category& c);

template <typename F>
void visit_vars(const IndexList& l, F&& f) {
  for (const IndexTerm& t : l.items) {
    if (t.is_var()) f(t.var);
  }
  if (l.tail) f(*l.tail);
}

template <typename F>
void visit_vars(const Category& c, F&& f) {
  visit_vars(c.indices, f);
}

}  // namespace sbgen

#endif  // SBGEN_TERM_HPP_
