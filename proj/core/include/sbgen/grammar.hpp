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

#ifndef SBGEN_GRAMMAR_HPP_
#define SBGEN_GRAMMAR_HPP_

#include <string>
#include <vector>

#include "sbgen/term.hpp"

namespace sbgen {

// A rewrite rule. Phrasal rules have one or more categories on the right
// hand side; lexical rules rewrite a category to surface words.
struct Rule {
  Category lhs;
  std::vector<Category> rhs;       // phrasal right hand side
  std::vector<std::string> words;  // lexical right hand side

  bool lexical() const { return rhs.empty(); }
};

struct Grammar {
  std::vector<Rule> rules;
  std::string start;

  bool has_phrasal_rule_for(const std::string& functor) const;
};

// A lexical or constituent item: category plus surface words.
struct Sign {
  Category category;
  std::vector<std::string> phon;

  bool operator==(const Sign&) const = default;
};

// The generator's input: an unordered collection of signs, numbered by
// position (1-based) so that node sets can refer to them.
struct Bag {
  std::vector<Sign> signs;

  std::size_t size() const { return signs.size(); }
};

// One bilingual-lexicon entry: a set of source sign patterns rewritten to a
// set of target sign templates, with shared variables equating indices.
struct BilingualSign {
  Category category;
  std::vector<std::string> words;
};

struct BilingualEntry {
  std::vector<BilingualSign> source;
  std::vector<BilingualSign> target;
};

// Copy of r with every variable renamed to a fresh id; shared variables stay
// shared within the copy.
Rule standardize_apart(const Rule& r, FreshVars& fresh);

VarId max_var(const Rule& r);
VarId max_var(const Grammar& g);
VarId max_var(const Bag& b);

bool alpha_equal(const Sign& a, const Sign& b);
bool alpha_equal(const Bag& a, const Bag& b);

}  // namespace sbgen

#endif  // SBGEN_GRAMMAR_HPP_
