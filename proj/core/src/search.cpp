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

#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace mpfjss::detail {

namespace {

int min_candidates(const Problem& p, int task) {
  int best = std::numeric_limits<int>::max();
  for (int s : p.tasks[task].slots) {
    best = std::min(best, static_cast<int>(p.slots[s].candidates.size()));
  }
  return best;
}

}  // namespace

std::vector<int> make_slot_order(const Problem& p) {
  std::vector<int> jobs(p.jobs.size());
  std::iota(jobs.begin(), jobs.end(), 0);
  std::sort(jobs.begin(), jobs.end(), [&](int a, int b) {
    return std::tie(p.jobs[a].deadline, p.jobs[a].id) <
           std::tie(p.jobs[b].deadline, p.jobs[b].id);
  });

  std::vector<int> order;
  for (int j : jobs) {
    const auto& members = p.jobs[j].tasks;
    std::vector<int> pending(members.begin(), members.end());
    while (!pending.empty()) {
      auto ready = [&](int t) {
        return std::none_of(pending.begin(), pending.end(), [&](int u) {
          return u != t && p.precedes(u, t);
        });
      };
      int pick = -1;
      for (int t : pending) {
        if (!ready(t)) continue;
        if (pick < 0 || std::make_pair(min_candidates(p, t), t) <
                            std::make_pair(min_candidates(p, pick), pick)) {
          pick = t;
        }
      }
      pending.erase(std::find(pending.begin(), pending.end(), pick));
      std::vector<int> slots = p.tasks[pick].slots;
      std::stable_sort(slots.begin(), slots.end(), [&](int a, int b) {
        return p.slots[a].candidates.size() < p.slots[b].candidates.size();
      });
      order.insert(order.end(), slots.begin(), slots.end());
    }
  }
  return order;
}

Search::Search(const Problem& problem, Minutes cap, SearchMode mode,
               const SearchLimits& limits)
    : p_(problem),
      cap_(cap),
      mode_(mode),
      limits_(limits),
      n_(problem.num_tasks()),
      slot_order_(make_slot_order(problem)),
      alloc_(problem.slots.size(), -1),
      res_tasks_(problem.resources.size()),
      used_(problem.resources.size(), 0),
      load_(problem.resources.size(), 0),
      shared_(static_cast<std::size_t>(n_) * n_, 0),
      dir_(static_cast<std::size_t>(n_) * n_, 0) {}

void Search::set_incumbent(Minutes total, Schedule sched) {
  if (total < incumbent_) {
    incumbent_ = total;
    best_ = std::move(sched);
  }
}

bool Search::setup_root() {
  for (int t = 0; t < n_; ++t) {
    var_.push_back(engine_.new_var(p_.tasks[t].ref.job + "/" +
                                   p_.tasks[t].ref.op));
  }
  bool ok = true;
  for (int t = 0; t < n_ && ok; ++t) {
    const dl::Var z0 = dl::Var::zero();
    ok = engine_.assert_upper(z0, var_[t], 0).feasible();
    const auto& job = p_.jobs[p_.tasks[t].job];
    ok = ok && engine_
                   .assert_upper(var_[t], z0,
                                 job.deadline + cap_ - duration(t))
                   .feasible();
  }
  for (const auto& [a, b] : p_.precedence) {
    ok = ok && engine_.assert_upper(var_[a], var_[b], -duration(a)).feasible();
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (p_.same_job_conflict(a, b)) conflicts_.emplace_back(a, b);
    }
  }
  return ok;
}

void Search::push_level() {
  level_marks_.push_back(trail_.size());
  engine_.push();
}

void Search::pop_level() {
  const std::size_t mark = level_marks_.back();
  level_marks_.pop_back();
  while (trail_.size() > mark) {
    const Undo u = trail_.back();
    trail_.pop_back();
    switch (u.kind) {
      case Undo::kAlloc:
        alloc_[u.a] = -1;
        --allocated_;
        --used_[u.b];
        load_[u.b] -= duration(p_.slots[u.a].task);
        break;
      case Undo::kResTask:
        res_tasks_[u.a].pop_back();
        break;
      case Undo::kShared:
        --shared_[cell(u.a, u.b)];
        break;
      case Undo::kConflict:
        conflicts_.pop_back();
        break;
      case Undo::kDir:
        dir_[cell(u.a, u.b)] = 0;
        break;
    }
  }
  engine_.pop();
}

bool Search::order(int first, int second) {
  const int a = std::min(first, second);
  const int b = std::max(first, second);
  dir_[cell(a, b)] = first == a ? 1 : -1;
  trail_.push_back({Undo::kDir, a, b});
  return engine_.assert_upper(var_[first], var_[second], -duration(first))
      .feasible();
}

void Search::allocate(int slot, int resource) {
  const int t = p_.slots[slot].task;
  alloc_[slot] = resource;
  ++allocated_;
  ++used_[resource];
  load_[resource] += duration(t);
  trail_.push_back({Undo::kAlloc, slot, resource});
  for (int u : res_tasks_[resource]) {
    if (p_.tasks[u].job == p_.tasks[t].job) continue;
    const int a = std::min(t, u);
    const int b = std::max(t, u);
    if (shared_[cell(a, b)]++ == 0) {
      conflicts_.emplace_back(a, b);
      trail_.push_back({Undo::kConflict, 0, 0});
    }
    trail_.push_back({Undo::kShared, a, b});
  }
  res_tasks_[resource].push_back(t);
  trail_.push_back({Undo::kResTask, resource, 0});
}

bool Search::apply(const Choice& c) {
  const int option = c.options[c.next];
  if (!c.is_pair) {
    allocate(c.id, option);
    return true;
  }
  const auto [a, b] = conflicts_[c.id];
  return option == 0 ? order(a, b) : order(b, a);
}

bool Search::check_energy() const {
  auto fits = [&](const std::vector<int>& members) {
    if (members.size() < 2) return true;
    Minutes lo = std::numeric_limits<Minutes>::max();
    Minutes hi = std::numeric_limits<Minutes>::min();
    Minutes work = 0;
    for (int t : members) {
      lo = std::min(lo, lower(t));
      hi = std::max(hi, upper(t) + duration(t));
      work += duration(t);
    }
    return work <= hi - lo;
  };
  for (const auto& job : p_.jobs) {
    if (!fits(job.tasks)) return false;
  }
  for (const auto& members : res_tasks_) {
    if (!fits(members)) return false;
  }
  return true;
}

int Search::bound_objective() {
  if (incumbent_ == kNoIncumbent) return 0;
  std::vector<Minutes> late(p_.jobs.size(), 0);
  Minutes sum = 0;
  for (std::size_t j = 0; j < p_.jobs.size(); ++j) {
    const auto& job = p_.jobs[j];
    if (job.tasks.empty()) continue;
    Minutes first = std::numeric_limits<Minutes>::max();
    Minutes completion = 0;
    for (int t : job.tasks) {
      first = std::min(first, lower(t));
      completion = std::max(completion, lower(t) + duration(t));
    }
    completion = std::max(completion, first + job.work);
    late[j] = std::max<Minutes>(0, completion - job.deadline);
    sum += late[j];
  }
  if (sum >= incumbent_) return -1;

  // Each job may only be as late as the incumbent leaves room for, given
  // the other jobs' lower bounds.
  int changed = 0;
  for (std::size_t j = 0; j < p_.jobs.size(); ++j) {
    const Minutes allowed = incumbent_ - 1 - (sum - late[j]);
    if (allowed >= cap_) continue;
    const auto& job = p_.jobs[j];
    const Minutes finish_by = job.deadline + allowed;
    for (int t : job.tasks) {
      if (upper(t) + duration(t) <= finish_by) continue;
      changed = 1;
      if (!engine_
               .assert_upper(var_[t], dl::Var::zero(),
                             finish_by - duration(t))
               .feasible()) {
        return -1;
      }
    }
  }
  return changed;
}

bool Search::propagate() {
  while (true) {
    if (!engine_.feasible()) return false;
    bool changed = false;
    for (std::size_t i = 0; i < conflicts_.size(); ++i) {
      const auto [a, b] = conflicts_[i];
      if (dir_[cell(a, b)] != 0) continue;
      const bool a_first = lower(a) + duration(a) <= upper(b);
      const bool b_first = lower(b) + duration(b) <= upper(a);
      if (!a_first && !b_first) return false;
      if (a_first && b_first) continue;
      if (!(a_first ? order(a, b) : order(b, a))) return false;
      changed = true;
    }
    if (!check_energy()) return false;
    if (mode_ == SearchMode::kOptimize) {
      const int r = bound_objective();
      if (r < 0) return false;
      if (r > 0) changed = true;
    }
    if (!changed) return true;
  }
}

std::vector<int> Search::slot_options(int slot) const {
  const auto& candidates = p_.slots[slot].candidates;
  std::vector<int> options;
  for (int r : candidates) {
    if (limits_.symmetry_breaking && used_[r] == 0) {
      // Only the first unused member of an interchangeable group.
      const int group = p_.resources[r].group;
      const bool earlier_unused =
          std::any_of(candidates.begin(), candidates.end(), [&](int q) {
            return q < r && p_.resources[q].group == group && used_[q] == 0;
          });
      if (earlier_unused) continue;
    }
    options.push_back(r);
  }
  auto available = [&](int r) {
    Minutes at = 0;
    for (int u : res_tasks_[r]) at = std::max(at, lower(u) + duration(u));
    return at;
  };
  std::vector<std::tuple<Minutes, Minutes, int>> keyed;
  for (int r : options) keyed.emplace_back(available(r), load_[r], r);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    options[i] = std::get<2>(keyed[i]);
  }
  return options;
}

std::optional<Search::Choice> Search::make_choice() {
  // An open pair first: the one closest to being forced, its roomier
  // direction first.
  int best = -1;
  Minutes best_slack = 0;
  bool best_a_first = true;
  for (std::size_t i = 0; i < conflicts_.size(); ++i) {
    const auto [a, b] = conflicts_[i];
    if (dir_[cell(a, b)] != 0) continue;
    const Minutes ab = upper(b) - lower(a) - duration(a);
    const Minutes ba = upper(a) - lower(b) - duration(b);
    const Minutes slack = std::min(ab, ba);
    if (best < 0 || slack < best_slack) {
      best = static_cast<int>(i);
      best_slack = slack;
      best_a_first = ab > ba || (ab == ba && lower(a) <= lower(b));
    }
  }
  if (best >= 0) {
    return Choice{true, best, best_a_first ? std::vector<int>{0, 1}
                                           : std::vector<int>{1, 0}};
  }
  if (allocated_ == static_cast<int>(alloc_.size())) return std::nullopt;
  for (int s : slot_order_) {
    if (alloc_[s] < 0) return Choice{false, s, slot_options(s)};
  }
  return std::nullopt;
}

void Search::record_solution() {
  Schedule sched;
  Minutes total = 0;
  std::vector<Minutes> completion(p_.jobs.size(), 0);
  for (int t = 0; t < n_; ++t) {
    const auto& task = p_.tasks[t];
    Assignment a{task.ref.job, task.ref.op, lower(t), lower(t) + task.duration,
                 {}};
    for (int s : task.slots) {
      const auto& r = p_.resources[alloc_[s]];
      a.resources.push_back({p_.classes[r.cls], r.index});
    }
    completion[task.job] = std::max(completion[task.job], a.end);
    sched.assignments.push_back(std::move(a));
  }
  for (std::size_t j = 0; j < p_.jobs.size(); ++j) {
    const Minutes late =
        std::max<Minutes>(0, completion[j] - p_.jobs[j].deadline);
    sched.tardiness[p_.jobs[j].id] = late;
    total += late;
  }
  sched.total_tardiness = total;
  ++stats_.solutions;
  set_incumbent(total, std::move(sched));
}

bool Search::backtrack() {
  while (!choices_.empty()) {
    pop_level();
    Choice& c = choices_.back();
    if (++c.next >= c.options.size()) {
      choices_.pop_back();
      continue;
    }
    push_level();
    if (apply(c)) return true;
    ++stats_.failures;
  }
  return false;
}

bool Search::out_of_budget() {
  if (limits_.node_limit != 0 && stats_.nodes >= limits_.node_limit) {
    return true;
  }
  if (limits_.deadline && (stats_.nodes & 63) == 0 &&
      Clock::now() >= *limits_.deadline) {
    return true;
  }
  return false;
}

SearchOutcome Search::run() {
  SearchOutcome out;
  bool exhausted = false;
  if (incumbent_ == 0) {
    exhausted = true;  // nothing can beat zero
  } else if (!setup_root()) {
    exhausted = true;
  } else {
    while (true) {
      if (out_of_budget()) {
        stopped_ = true;
        break;
      }
      ++stats_.nodes;
      bool ok = propagate();
      if (ok) {
        std::optional<Choice> choice = make_choice();
        if (!choice) {
          record_solution();
          if (mode_ == SearchMode::kDecide || incumbent_ == 0) {
            exhausted = mode_ == SearchMode::kOptimize;
            break;
          }
          ok = false;
        } else {
          choices_.push_back(std::move(*choice));
          push_level();
          ok = apply(choices_.back());
        }
      }
      if (!ok) {
        ++stats_.failures;
        if (!backtrack()) {
          exhausted = true;
          break;
        }
      }
    }
  }
  out.exhausted = exhausted && !stopped_;
  out.best = std::move(best_);
  out.best_total = incumbent_;
  out.stats = stats_;
  return out;
}

}  // namespace mpfjss::detail
