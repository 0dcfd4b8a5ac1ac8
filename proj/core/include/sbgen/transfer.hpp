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

#ifndef SBGEN_TRANSFER_HPP_
#define SBGEN_TRANSFER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "sbgen/grammar.hpp"

namespace sbgen {

// One entry application inside a transfer result: which entry consumed
// which source bag positions (1-based).
struct TransferMatch {
  std::size_t entry;
  std::vector<int> positions;
};

struct TargetBag {
  Bag bag;
  std::vector<TransferMatch> trace;
};

struct TransferResult {
  std::vector<TargetBag> bags;
};

// Rewrites a source bag into target bags. Every exact partition of the
// source signs into entry matches yields one result: each entry's source
// patterns unify with the matched signs under one running substitution, and
// the target bag concatenates the instantiated target templates, groups
// ordered by the position of the first sign they consume.
//
// Throws when the lexicon is empty or a sign matches no entry at all; a bag
// that is individually matchable but admits no complete partition yields an
// empty result.
TransferResult transfer(const Bag& source,
                        std::span<const BilingualEntry> lexicon);

}  // namespace sbgen

#endif  // SBGEN_TRANSFER_HPP_
