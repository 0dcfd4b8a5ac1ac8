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

#include "sbgen/grammar.hpp"

#include <algorithm>

namespace sbgen {

bool Grammar::has_phrasal_rule_for(const std::string& functor) const {
  return std::any_of(rules.begin(), rules.end(), [&](const Rule& r) {
    return !r.lexical() && r.lhs.functor == functor;
  });
}

Rule standardize_apart(const Rule& r, FreshVars& fresh) {
  VarRenamer rename(fresh);
  Rule out;
  out.lhs = rename(r.lhs);
  out.rhs.reserve(r.rhs.size());
  for (const Category& c : r.rhs) out.rhs.push_back(rename(c));
  out.words = r.words;
  return out;
}

VarId max_var(const Rule& r) {
  VarId m = max_var(r.lhs);
  for (const Category& c : r.rhs) m = std::max(m, max_var(c));
  return m;
}

VarId max_var(const Grammar& g) {
  VarId m = 0;
  for (const Rule& r : g.rules) m = std::max(m, max_var(r));
  return m;
}

VarId max_var(const Bag& b) {
  VarId m = 0;
  for (const Sign& s : b.signs) m = std::max(m, max_var(s.category));
  return m;
}

bool alpha_equal(const Sign& a, const Sign& b) {
  AlphaBijection bij;
  return a.phon == b.phon && alpha_match(bij, a.category, b.category);
}

bool alpha_equal(const Bag& a, const Bag& b) {
  if (a.signs.size() != b.signs.size()) return false;
  AlphaBijection bij;
  for (std::size_t i = 0; i < a.signs.size(); ++i) {
    if (a.signs[i].phon != b.signs[i].phon) return false;
    if (!alpha_match(bij, a.signs[i].category, b.signs[i].category))
      return false;
  }
  return true;
}

}  // namespace sbgen
