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

#ifndef SBGEN_GRAMMAR_IO_HPP_
#define SBGEN_GRAMMAR_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sbgen/grammar.hpp"

namespace sbgen {

// File formats
// ------------
// Grammar (.sbg): statements terminated by '.', comments with '#'.
//   start s.
//   rule s(X|P) -> np(X) vp(X|P).
//   lex np(j) -> "John".
// Bag (.sbb): one sign per line.
//   np(m) ["Marie"]
// Bilingual lexicon (.sbx):
//   xfer { v(X,Y,E)["loves"] } => { v(X,Y,E)["aime"] }.
//
// Categories are written f(t1,t2|Tail); atoms and functors are lowercase
// identifiers, variables uppercase. A variable keeps one role per statement
// (index item or list tail).

Grammar load_grammar(std::istream& in, const std::string& source = "<grammar>");
Bag load_bag(std::istream& in, const std::string& source = "<bag>");
std::vector<BilingualEntry> load_bilingual(
    std::istream& in, const std::string& source = "<bilingual>");

Grammar load_grammar_text(std::string_view text,
                          const std::string& source = "<grammar>");
Bag load_bag_text(std::string_view text, const std::string& source = "<bag>");
std::vector<BilingualEntry> load_bilingual_text(
    std::string_view text, const std::string& source = "<bilingual>");

Grammar load_grammar_file(const std::string& path);
Bag load_bag_file(const std::string& path);
std::vector<BilingualEntry> load_bilingual_file(const std::string& path);

// Single-item parsers, mainly for tests and diagnostics. Each call names
// variables from a fresh counter starting at 1.
Category parse_category_text(std::string_view text,
                             const std::string& source = "<category>");
Sign parse_sign_text(std::string_view text, const std::string& source = "<sign>");
Rule parse_rule_text(std::string_view text, const std::string& source = "<rule>");

// Assigns stable display names (X1, X2, ...) to variable ids in first
// occurrence order; one namer per rendered statement.
class VarNamer {
 public:
  std::string operator()(VarId v);

 private:
  std::vector<VarId> seen_;
};

std::string render_category(const Category& c, VarNamer& names);
std::string render_category(const Category& c);
std::string render_sign(const Sign& s);
std::string render_rule(const Rule& r);
std::string render_grammar(const Grammar& g);
std::string render_bag(const Bag& b);
std::string render_bilingual(const std::vector<BilingualEntry>& entries);

}  // namespace sbgen

#endif  // SBGEN_GRAMMAR_IO_HPP_
