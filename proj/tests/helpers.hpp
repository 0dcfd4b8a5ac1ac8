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

#ifndef SBGEN_TESTS_HELPERS_HPP_
#define SBGEN_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "sbgen/grammar_io.hpp"

namespace sbgen::test {

inline Category cat(std::string_view text) { return parse_category_text(text); }
inline Sign sign(std::string_view text) { return parse_sign_text(text); }
inline Rule rule(std::string_view text) { return parse_rule_text(text); }

inline std::vector<std::string> words(std::string_view sentence) {
  std::vector<std::string> out;
  std::string w;
  for (char c : sentence) {
    if (c == ' ') {
      if (!w.empty()) out.push_back(std::move(w));
      w.clear();
    } else {
      w.push_back(c);
    }
  }
  if (!w.empty()) out.push_back(std::move(w));
  return out;
}

inline std::vector<std::vector<std::string>> sentences(
    std::initializer_list<std::string_view> lines) {
  std::vector<std::vector<std::string>> out;
  for (std::string_view line : lines) out.push_back(words(line));
  return out;
}

}  // namespace sbgen::test

#endif  // SBGEN_TESTS_HELPERS_HPP_
