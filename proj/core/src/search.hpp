// Copyright 2026 The mpfjss Authors
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

#ifndef MPFJSS_SRC_SEARCH_HPP_
#define MPFJSS_SRC_SEARCH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mpfjss/dl_engine.hpp"
#include "mpfjss/scheduler.hpp"
#include "problem.hpp"

namespace mpfjss::detail {

enum class SearchMode { kDecide, kOptimize };

// Slot allocation order shared by both searches: earliest-deadline job
// first; inside a job, a topological order preferring tasks with few capable
// instances; inside a task, scarce classes first.
std::vector<int> make_slot_order(const Problem& p);

struct SearchOutcome {
  std::optional<Schedule> best;
  Minutes best_total = 0;
  // True when the whole space was explored: for kDecide an absent `best`
  // proves infeasibility, for kOptimize `best` is optimal.
  bool exhausted = false;
  SearchStats stats;
};

// Depth-first search over allocations and ordering booleans. Each node runs
// window propagation on open conflict pairs, job and resource energy checks
// and, when optimizing, the total-tardiness bound against the incumbent.
class Search {
 public:
  Search(const Problem& problem, Minutes cap, SearchMode mode,
         const SearchLimits& limits);

  // Seeds branch and bound; only schedules strictly better are searched.
  void set_incumbent(Minutes total, Schedule sched);

  SearchOutcome run();

 private:
  static constexpr Minutes kNoIncumbent = std::numeric_limits<Minutes>::max();

  struct Undo {
    enum Kind : std::uint8_t { kAlloc, kResTask, kShared, kConflict, kDir };
    Kind kind;
    int a;
    int b;
  };
  struct Choice {
    bool is_pair;
    int id;  // conflict index or slot
    std::vector<int> options;
    std::size_t next = 0;
  };

  bool setup_root();
  std::size_t cell(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + b;
  }
  Minutes lower(int t) const { return *engine_.lower_bound(var_[t]); }
  Minutes upper(int t) const { return *engine_.upper_bound(var_[t]); }
  Minutes duration(int t) const { return p_.tasks[t].duration; }

  bool order(int first, int second);
  void allocate(int slot, int resource);
  bool apply(const Choice& c);
  std::optional<Choice> make_choice();
  std::vector<int> slot_options(int slot) const;

  bool propagate();
  bool check_energy() const;
  int bound_objective();  // -1 fail, 0 no change, 1 tightened
  void record_solution();

  void push_level();
  void pop_level();
  bool backtrack();
  bool out_of_budget();

  const Problem& p_;
  const Minutes cap_;
  const SearchMode mode_;
  const SearchLimits limits_;
  const int n_;

  dl::Engine engine_;
  std::vector<dl::Var> var_;
  std::vector<int> slot_order_;

  std::vector<int> alloc_;
  int allocated_ = 0;
  std::vector<std::vector<int>> res_tasks_;
  std::vector<int> used_;
  std::vector<Minutes> load_;
  std::vector<int> shared_;
  std::vector<signed char> dir_;  // for a < b: 1 a first, -1 b first
  std::vector<std::pair<int, int>> conflicts_;

  std::vector<Undo> trail_;
  std::vector<std::size_t> level_marks_;
  std::vector<Choice> choices_;

  Minutes incumbent_ = kNoIncumbent;
  std::optional<Schedule> best_;
  SearchStats stats_;
  bool stopped_ = false;
};

}  // namespace mpfjss::detail

#endif  // MPFJSS_SRC_SEARCH_HPP_
