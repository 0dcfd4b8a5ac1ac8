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

#include "sbgen/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "sbgen/error.hpp"

namespace sbgen {

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const Bag& bag, const Grammar& grammar, const OracleConfig& cfg,
         bool first_only)
      : bag_(bag),
        grammar_(grammar),
        first_only_(first_only),
        fresh_(std::max(max_var(grammar), max_var(bag)) + 1),
        deadline_(Clock::now() +
                  std::chrono::duration_cast<Clock::duration>(
                      std::chrono::duration<double>(
                          cfg.time_budget_seconds))),
        max_expansions_(cfg.max_expansions) {
    const int n = static_cast<int>(bag.size());
    depth_limit_ = cfg.depth_limit > 0 ? cfg.depth_limit : 2 * n;
    depth_limit_ = std::max(depth_limit_, n);
  }

  OracleRun run() {
    if (bag_.signs.empty()) throw Error("generate: empty bag");
    Category goal;
    goal.functor = grammar_.start;
    goal.indices.tail = fresh_.fresh();  // matches any start-functor indices

    const std::uint64_t all =
        bag_.size() == 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << bag_.size()) - 1;
    realize(goal, all, Substitution{},
            [this](std::uint64_t avail, const Substitution&) {
              if (avail != 0) return true;
              if (seen_.insert(phrase_).second) {
                result_.sentences.push_back(phrase_);
                if (first_only_) return false;
              }
              return true;
            });
    result_.expansions = expansions_;
    return std::move(result_);
  }

 private:
  using Cont = std::function<bool(std::uint64_t, const Substitution&)>;

  // Enumerates every way to realize `goal` from the available signs: either
  // consume one sign whose category unifies with the goal, or expand the
  // goal with a phrasal rule and realize its right hand side left to right.
  // The continuation returns false to abort the whole search.
  bool realize(const Category& goal, std::uint64_t avail,
               const Substitution& s, const Cont& cont) {
    for (std::size_t i = 0; i < bag_.signs.size(); ++i) {
      if (!(avail >> i & 1u)) continue;
      tick();
      auto s2 = unify(s, goal, bag_.signs[i].category);
      if (!s2) continue;
      const auto& phon = bag_.signs[i].phon;
      phrase_.insert(phrase_.end(), phon.begin(), phon.end());
      bool keep_going = cont(avail & ~(std::uint64_t{1} << i), *s2);
      phrase_.resize(phrase_.size() - phon.size());
      if (!keep_going) return false;
    }
    if (depth_used_ >= depth_limit_) return true;
    for (const Rule& rule : grammar_.rules) {
      if (rule.lexical()) continue;
      tick();
      Rule r = standardize_apart(rule, fresh_);
      auto s2 = unify(s, r.lhs, goal);
      if (!s2) continue;
      ++depth_used_;
      bool keep_going = realize_seq(r.rhs, 0, avail, *s2, cont);
      --depth_used_;
      if (!keep_going) return false;
    }
    return true;
  }

  bool realize_seq(const std::vector<Category>& cats, std::size_t k,
                   std::uint64_t avail, const Substitution& s,
                   const Cont& cont) {
    if (k == cats.size()) return cont(avail, s);
    return realize(cats[k], avail, s,
                   [&](std::uint64_t avail2, const Substitution& s2) {
                     return realize_seq(cats, k + 1, avail2, s2, cont);
                   });
  }

  void tick() {
    ++expansions_;
    if (expansions_ > max_expansions_) {
      throw OracleBudgetError(expansions_, "expansion limit");
    }
    if ((expansions_ & 0x3ff) == 0 && Clock::now() > deadline_) {
      throw OracleBudgetError(expansions_, "time limit");
    }
  }

  const Bag& bag_;
  const Grammar& grammar_;
  bool first_only_;
  FreshVars fresh_;
  Clock::time_point deadline_;
  std::uint64_t max_expansions_;
  int depth_limit_ = 0;
  int depth_used_ = 0;
  std::uint64_t expansions_ = 0;
  std::vector<std::string> phrase_;
  std::set<std::vector<std::string>> seen_;
  OracleRun result_;
};

}  // namespace

OracleRun oracle_generate_all(const Bag& bag, const Grammar& grammar,
                              OracleConfig config) {
  return Search(bag, grammar, config, false).run();
}

OracleRun oracle_generate_first(const Bag& bag, const Grammar& grammar,
                                OracleConfig config) {
  return Search(bag, grammar, config, true).run();
}

}  // namespace sbgen
