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

#include "sbgen/term.hpp"

#include <algorithm>
#include <utility>

namespace sbgen {

IndexTerm IndexTerm::atom(std::string n) {
  IndexTerm t;
  t.kind = Kind::kAtom;
  t.name = std::move(n);
  return t;
}

IndexTerm IndexTerm::variable(VarId v) {
  IndexTerm t;
  t.kind = Kind::kVar;
  t.var = v;
  return t;
}

const Binding* Substitution::lookup(VarId v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

namespace {

// True iff variable v occurs anywhere in l (item or tail position).
bool occurs_in(VarId v, const IndexList& l) {
  for (const IndexTerm& t : l.items) {
    if (t.is_var() && t.var == v) return true;
  }
  return l.tail && *l.tail == v;
}

}  // namespace

bool Substitution::bind_term(VarId v, IndexTerm value) {
  value = apply(*this, value);
  if (value.is_var() && value.var == v) return true;
  if (map_.count(v)) return false;

  // A term may only replace item-position occurrences of v; a tail-position
  // occurrence means the variable is used in both roles.
  for (const auto& [w, b] : map_) {
    if (const auto* l = std::get_if<IndexList>(&b)) {
      if (l->tail && *l->tail == v) return false;
    }
  }
  for (auto& [w, b] : map_) {
    if (auto* t = std::get_if<IndexTerm>(&b)) {
      if (t->is_var() && t->var == v) *t = value;
    } else {
      auto& l = std::get<IndexList>(b);
      for (IndexTerm& item : l.items) {
        if (item.is_var() && item.var == v) item = value;
      }
    }
  }
  map_.emplace(v, std::move(value));
  return true;
}

bool Substitution::bind_list(VarId v, IndexList value) {
  value = apply(*this, value);
  if (value.items.empty() && value.tail && *value.tail == v) return true;
  if (occurs_in(v, value)) return false;  // occurs check
  if (map_.count(v)) return false;

  // A list may only replace tail-position occurrences of v.
  for (const auto& [w, b] : map_) {
    if (const auto* t = std::get_if<IndexTerm>(&b)) {
      if (t->is_var() && t->var == v) return false;
    } else if (const auto* l = std::get_if<IndexList>(&b)) {
      for (const IndexTerm& item : l->items) {
        if (item.is_var() && item.var == v) return false;
      }
    }
  }
  for (auto& [w, b] : map_) {
    if (auto* l = std::get_if<IndexList>(&b)) {
      if (l->tail && *l->tail == v) {
        l->tail = value.tail;
        l->items.insert(l->items.end(), value.items.begin(),
                        value.items.end());
      }
    }
  }
  map_.emplace(v, std::move(value));
  return true;
}

IndexTerm apply(const Substitution& s, const IndexTerm& t) {
  if (t.is_var()) {
    if (const Binding* b = s.lookup(t.var)) {
      if (const auto* bt = std::get_if<IndexTerm>(b)) return *bt;
    }
  }
  return t;
}

IndexList apply(const Substitution& s, const IndexList& l) {
  IndexList out;
  out.items.reserve(l.items.size());
  for (const IndexTerm& t : l.items) out.items.push_back(apply(s, t));
  if (l.tail) {
    if (const Binding* b = s.lookup(*l.tail)) {
      if (const auto* bl = std::get_if<IndexList>(b)) {
        for (const IndexTerm& t : bl->items) out.items.push_back(t);
        out.tail = bl->tail;
        return out;
      }
    }
    out.tail = l.tail;
  }
  return out;
}

Category apply(const Substitution& s, const Category& c) {
  return Category{c.functor, apply(s, c.indices)};
}

namespace {

bool unify_terms(Substitution& s, const IndexTerm& x0, const IndexTerm& y0) {
  const IndexTerm x = apply(s, x0);
  const IndexTerm y = apply(s, y0);
  if (x.is_atom() && y.is_atom()) return x.name == y.name;
  if (x.is_var()) {
    if (y.is_var() && y.var == x.var) return true;
    return s.bind_term(x.var, y);
  }
  return s.bind_term(y.var, x);
}

IndexList rest_of(const IndexList& l) {
  IndexList r;
  r.items.assign(l.items.begin() + 1, l.items.end());
  r.tail = l.tail;
  return r;
}

bool unify_lists_into(Substitution& s, IndexList a, IndexList b) {
  for (;;) {
    a = apply(s, a);
    b = apply(s, b);
    if (!a.items.empty() && !b.items.empty()) {
      if (!unify_terms(s, a.items.front(), b.items.front())) return false;
      a = rest_of(a);
      b = rest_of(b);
      continue;
    }
    if (a.items.empty()) {
      if (!a.tail) {
        if (!b.items.empty()) return false;  // length mismatch
        if (!b.tail) return true;
        return s.bind_list(*b.tail, IndexList{});
      }
      return s.bind_list(*a.tail, b);
    }
    // b exhausted, a still has items.
    if (!b.tail) return false;
    return s.bind_list(*b.tail, a);
  }
}

}  // namespace

std::optional<Substitution> unify_lists(const Substitution& base,
                                        const IndexList& a,
                                        const IndexList& b) {
  Substitution s = base;
  if (!unify_lists_into(s, a, b)) return std::nullopt;
  return s;
}

std::optional<Substitution> unify(const Substitution& base, const Category& a,
                                  const Category& b) {
  if (a.functor != b.functor) return std::nullopt;
  return unify_lists(base, a.indices, b.indices);
}

std::optional<Substitution> unify(const Category& a, const Category& b) {
  return unify(Substitution{}, a, b);
}

bool AlphaBijection::match(VarId a, VarId b) {
  auto [fit, finserted] = fwd_.emplace(a, b);
  if (!finserted) return fit->second == b;
  auto [rit, rinserted] = rev_.emplace(b, a);
  if (!rinserted) {
    fwd_.erase(a);
    return false;
  }
  return true;
}

bool alpha_match(AlphaBijection& bij, const IndexTerm& a, const IndexTerm& b) {
  if (a.kind != b.kind) return false;
  if (a.is_atom()) return a.name == b.name;
  return bij.match(a.var, b.var);
}

bool alpha_match(AlphaBijection& bij, const IndexList& a, const IndexList& b) {
  if (a.items.size() != b.items.size()) return false;
  if (a.tail.has_value() != b.tail.has_value()) return false;
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (!alpha_match(bij, a.items[i], b.items[i])) return false;
  }
  if (a.tail && !bij.match(*a.tail, *b.tail)) return false;
  return true;
}

bool alpha_match(AlphaBijection& bij, const Category& a, const Category& b) {
  return a.functor == b.functor && alpha_match(bij, a.indices, b.indices);
}

bool alpha_equal(const Category& a, const Category& b) {
  AlphaBijection bij;
  return alpha_match(bij, a, b);
}

IndexTerm VarRenamer::operator()(const IndexTerm& t) {
  if (!t.is_var()) return t;
  auto [it, inserted] = map_.emplace(t.var, 0);
  if (inserted) it->second = fresh_.fresh();
  return IndexTerm::variable(it->second);
}

IndexList VarRenamer::operator()(const IndexList& l) {
  IndexList out;
  out.items.reserve(l.items.size());
  for (const IndexTerm& t : l.items) out.items.push_back((*this)(t));
  if (l.tail) {
    auto [it, inserted] = map_.emplace(*l.tail, 0);
    if (inserted) it->second = fresh_.fresh();
    out.tail = it->second;
  }
  return out;
}

Category VarRenamer::operator()(const Category& c) {
  return Category{c.functor, (*this)(c.indices)};
}

VarId max_var(const IndexList& l) {
  VarId m = 0;
  visit_vars(l, [&m](VarId v) { m = std::max(m, v); });
  return m;
}

VarId max_var(const Category& c) { return max_var(c.indices); }

}  // namespace sbgen
