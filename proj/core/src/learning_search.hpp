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

#ifndef MPFJSS_SRC_LEARNING_SEARCH_HPP_
#define MPFJSS_SRC_LEARNING_SEARCH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mpfjss/dl_engine.hpp"
#include "mpfjss/scheduler.hpp"
#include "problem.hpp"
#include "search.hpp"

namespace mpfjss::detail {

// Conflict-driven search over Boolean allocation and ordering literals with
// the difference-logic engine as theory.
//
//   alloc(s, r)    slot s runs on resource r; exactly one per slot
//   before(a, b)   a finishes before b starts; asserts s_b - s_a >= p_a
//
// Two tasks of different jobs on one resource, and two tasks of one job not
// related by precedence, need one of before(a, b), before(b, a). A negative
// cycle in the engine becomes a clause over the ordering literals on the
// cycle; when optimizing, a total-tardiness lower bound at or above the
// incumbent becomes a clause over the ordering literals that produced the
// late completions. Clauses are learned at the first unique implication
// point and the search backjumps.
//
// Decisions follow the problem structure: slots in earliest-deadline order
// take the resource that frees up first; once every slot is allocated, open
// resource pairs are ordered tightest first.
//
// A resource also fails when the tasks allocated to it whose windows lie in
// some [E, L] need more than L - E minutes; the clause is over those
// allocations.
class LearningSearch {
 public:
  LearningSearch(const Problem& problem, Minutes cap, SearchMode mode,
                 const SearchLimits& limits);

  void set_incumbent(Minutes total, Schedule sched);
  SearchOutcome run();

 private:
  using Lit = int;  // 2 * var + (negated ? 1 : 0)
  static constexpr int kNoReason = -1;
  static constexpr Minutes kNoIncumbent = std::numeric_limits<Minutes>::max();

  static Lit pos(int v) { return 2 * v; }
  static Lit neg(int v) { return 2 * v + 1; }
  static int var(Lit l) { return l >> 1; }
  static Lit flip(Lit l) { return l ^ 1; }

  struct VarInfo {
    bool is_alloc;
    int a;  // slot, or first task
    int b;  // resource, or second task
  };
  struct Clause {
    std::vector<Lit> lits;
    bool learnt = false;
    bool deleted = false;
    int lbd = 0;
  };

  // Encoding.
  int new_var(bool is_alloc, int a, int b);
  bool add_clause(std::vector<Lit> lits);  // false: empty at the root
  bool build();
  int before_var(int a, int b) const {
    return before_[static_cast<std::size_t>(a) * n_ + b];
  }

  // Assignment.
  signed char value(Lit l) const {
    const signed char v = value_[var(l)];
    return (l & 1) ? static_cast<signed char>(-v) : v;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  void enqueue(Lit l, int reason);
  void new_level();
  void cancel_until(int level);

  // Propagation; returns false on conflict with conflict_ filled in.
  bool propagate();
  bool propagate_clauses(Lit p);
  bool check_objective();
  bool check_energy();
  int alloc_var_of(int task, int res) const;
  void explain_lower(int task, std::vector<Lit>& out) const;

  // Learning.
  void analyze(std::vector<Lit>& learnt, int& back_level);
  bool resolve_conflict();  // false when the root is refuted
  void reduce_db();

  // Heuristic.
  std::optional<Lit> pick_branch();
  Minutes lower(int t) const { return *engine_.lower_bound(tvar_[t]); }
  Minutes upper(int t) const { return *engine_.upper_bound(tvar_[t]); }
  Minutes duration(int t) const { return p_.tasks[t].duration; }

  void record_solution();
  bool out_of_budget();

  const Problem& p_;
  const Minutes cap_;
  const SearchMode mode_;
  const SearchLimits limits_;
  const int n_;

  dl::Engine engine_;
  std::vector<dl::Var> tvar_;

  std::vector<VarInfo> vars_;
  std::vector<std::vector<int>> alloc_var_;  // [slot][candidate position]
  std::vector<int> before_;                  // n * n, -1 when absent
  // Ordering-literal pairs that may be open: cross-job pairs sharing a
  // candidate resource and unordered same-job pairs.
  std::vector<std::pair<int, int>> same_job_pairs_;
  // Incoming ordering candidates per task: (predecessor, var or -1 static).
  std::vector<std::vector<std::pair<int, int>>> in_edges_;

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;  // by literal
  int num_learnt_ = 0;
  std::size_t max_learnt_ = 4000;

  std::vector<signed char> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  // Derived from the trail.
  std::vector<int> slot_res_;                // -1 while unallocated
  std::vector<std::vector<int>> res_tasks_;  // LIFO with the trail
  std::vector<Minutes> load_;
  int allocated_ = 0;

  // Windows that hold whatever is decided: earliest start from the
  // precedence chain, latest end from the deadline and the cap.
  std::vector<Minutes> est_;
  std::vector<Minutes> lct_;
  std::vector<std::pair<int, int>> energy_queue_;  // (task, resource)

  std::vector<int> slot_order_;
  std::vector<Lit> conflict_;
  std::vector<char> seen_;
  std::vector<Lit> scratch_;

  Minutes incumbent_ = kNoIncumbent;
  std::optional<Schedule> best_;
  SearchStats stats_;
  bool stopped_ = false;
};

}  // namespace mpfjss::detail

#endif  // MPFJSS_SRC_LEARNING_SEARCH_HPP_
