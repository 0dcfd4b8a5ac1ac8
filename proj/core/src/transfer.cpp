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

#include "sbgen/transfer.hpp"

#include <algorithm>
#include <utility>

#include "sbgen/error.hpp"
#include "sbgen/grammar_io.hpp"

namespace sbgen {

namespace {

struct EntryInstance {
  std::vector<BilingualSign> source;
  std::vector<BilingualSign> target;
};

EntryInstance instantiate(const BilingualEntry& e, FreshVars& fresh) {
  VarRenamer rename(fresh);
  EntryInstance inst;
  inst.source.reserve(e.source.size());
  for (const BilingualSign& bs : e.source) {
    inst.source.push_back(BilingualSign{rename(bs.category), bs.words});
  }
  inst.target.reserve(e.target.size());
  for (const BilingualSign& bs : e.target) {
    inst.target.push_back(BilingualSign{rename(bs.category), bs.words});
  }
  return inst;
}

struct Group {
  std::size_t entry;
  std::vector<int> positions;  // 1-based, one per source pattern
  EntryInstance inst;
};

class PartitionSearch {
 public:
  PartitionSearch(const Bag& src, std::span<const BilingualEntry> lexicon,
                  FreshVars& fresh)
      : src_(src), lexicon_(lexicon), fresh_(fresh) {
    consumed_.assign(src.signs.size(), false);
  }

  TransferResult run() {
    descend(Substitution{});
    return std::move(result_);
  }

 private:
  void descend(const Substitution& s) {
    std::size_t next = 0;
    while (next < consumed_.size() && consumed_[next]) ++next;
    if (next == consumed_.size()) {
      emit(s);
      return;
    }
    for (std::size_t ei = 0; ei < lexicon_.size(); ++ei) {
      Group g;
      g.entry = ei;
      g.inst = instantiate(lexicon_[ei], fresh_);
      match_patterns(g, 0, s, static_cast<int>(next) + 1);
    }
  }

  // Assign source pattern `k` of the group to some unconsumed sign; when all
  // patterns are placed the group must contain the lowest unconsumed
  // position, which makes the partition enumeration canonical.
  void match_patterns(Group& g, std::size_t k, const Substitution& s,
                      int lowest) {
    if (k == g.inst.source.size()) {
      if (std::find(g.positions.begin(), g.positions.end(), lowest) ==
          g.positions.end()) {
        return;
      }
      groups_.push_back(g);
      descend(s);
      groups_.pop_back();
      return;
    }
    const BilingualSign& pat = g.inst.source[k];
    for (std::size_t i = 0; i < src_.signs.size(); ++i) {
      if (consumed_[i]) continue;
      const Sign& sign = src_.signs[i];
      if (sign.phon != pat.words) continue;
      auto s2 = unify(s, pat.category, sign.category);
      if (!s2) continue;
      consumed_[i] = true;
      g.positions.push_back(static_cast<int>(i) + 1);
      match_patterns(g, k + 1, *s2, lowest);
      g.positions.pop_back();
      consumed_[i] = false;
    }
  }

  void emit(const Substitution& s) {
    TargetBag out;
    for (const Group& g : groups_) {
      for (const BilingualSign& tmpl : g.inst.target) {
        out.bag.signs.push_back(Sign{apply(s, tmpl.category), tmpl.words});
      }
      out.trace.push_back(TransferMatch{g.entry, g.positions});
    }
    for (const TargetBag& prev : result_.bags) {
      if (alpha_equal(prev.bag, out.bag)) return;
    }
    result_.bags.push_back(std::move(out));
  }

  const Bag& src_;
  std::span<const BilingualEntry> lexicon_;
  FreshVars& fresh_;
  std::vector<bool> consumed_;
  std::vector<Group> groups_;
  TransferResult result_;
};

}  // namespace

TransferResult transfer(const Bag& source,
                        std::span<const BilingualEntry> lexicon) {
  if (lexicon.empty()) throw Error("transfer: empty bilingual lexicon");

  VarId top = max_var(source);
  for (const BilingualEntry& e : lexicon) {
    for (const BilingualSign& bs : e.source) top = std::max(top, max_var(bs.category));
    for (const BilingualSign& bs : e.target) top = std::max(top, max_var(bs.category));
  }
  FreshVars fresh(top + 1);

  // A sign no entry can touch makes the whole bag untranslatable; report it
  // by name rather than just returning zero partitions.
  for (const Sign& sign : source.signs) {
    bool matchable = false;
    for (const BilingualEntry& e : lexicon) {
      for (const BilingualSign& pat : e.source) {
        if (pat.words != sign.phon) continue;
        VarRenamer rename(fresh);
        if (unify(rename(pat.category), sign.category)) {
          matchable = true;
          break;
        }
      }
      if (matchable) break;
    }
    if (!matchable) {
      throw Error("transfer: no bilingual entry matches sign " +
                  render_sign(sign));
    }
  }

  PartitionSearch search(source, lexicon, fresh);
  return search.run();
}

}  // namespace sbgen
