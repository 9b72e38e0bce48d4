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

#include "learning_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace mpfjss::detail {

LearningSearch::LearningSearch(const Problem& problem, Minutes cap,
                               SearchMode mode, const SearchLimits& limits)
    : p_(problem),
      cap_(cap),
      mode_(mode),
      limits_(limits),
      n_(problem.num_tasks()),
      alloc_var_(problem.slots.size()),
      before_(static_cast<std::size_t>(n_) * n_, -1),
      in_edges_(n_),
      slot_res_(problem.slots.size(), -1),
      res_tasks_(problem.resources.size()),
      load_(problem.resources.size(), 0),
      slot_order_(make_slot_order(problem)) {}

void LearningSearch::set_incumbent(Minutes total, Schedule sched) {
  if (total < incumbent_) {
    incumbent_ = total;
    best_ = std::move(sched);
  }
}

int LearningSearch::new_var(bool is_alloc, int a, int b) {
  const int v = static_cast<int>(vars_.size());
  vars_.push_back({is_alloc, a, b});
  value_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  return v;
}

bool LearningSearch::add_clause(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i] == flip(lits[i - 1])) return true;  // tautology
  }
  if (lits.empty()) return false;
  if (lits.size() == 1) {
    if (value(lits[0]) == -1) return false;
    if (value(lits[0]) == 0) enqueue(lits[0], kNoReason);
    return true;
  }
  const int ci = static_cast<int>(clauses_.size());
  watches_[lits[0]].push_back(ci);
  watches_[lits[1]].push_back(ci);
  clauses_.push_back({std::move(lits), false, false, 0});
  return true;
}

bool LearningSearch::build() {
  const dl::Var z0 = dl::Var::zero();
  for (int t = 0; t < n_; ++t) {
    tvar_.push_back(engine_.new_var());
    const auto& job = p_.jobs[p_.tasks[t].job];
    if (!engine_.assert_upper(z0, tvar_[t], 0) ||
        !engine_.assert_upper(tvar_[t], z0,
                              job.deadline + cap_ - duration(t))) {
      return false;
    }
  }
  for (const auto& [a, b] : p_.precedence) {
    if (!engine_.assert_upper(tvar_[a], tvar_[b], -duration(a))) return false;
    in_edges_[b].push_back({a, -1});
  }

  for (int t = 0; t < n_; ++t) {
    est_.push_back(lower(t));
    lct_.push_back(upper(t) + duration(t));
  }
  // Tasks of one job never overlap either.
  for (const auto& job : p_.jobs) {
    for (int e : job.tasks) {
      Minutes need = 0;
      std::vector<int> inside;
      for (int t : job.tasks) {
        if (est_[t] >= est_[e]) inside.push_back(t);
      }
      std::sort(inside.begin(), inside.end(),
                [&](int a, int b) { return lct_[a] < lct_[b]; });
      for (int t : inside) {
        need += duration(t);
        if (est_[e] + need > lct_[t]) return false;
      }
    }
  }

  // Allocation: exactly one candidate per slot.
  for (std::size_t s = 0; s < p_.slots.size(); ++s) {
    std::vector<Lit> some;
    for (int r : p_.slots[s].candidates) {
      const int v = new_var(true, static_cast<int>(s), r);
      alloc_var_[s].push_back(v);
      some.push_back(pos(v));
    }
    if (!add_clause(some)) return false;
    for (std::size_t i = 0; i < some.size(); ++i) {
      for (std::size_t j = i + 1; j < some.size(); ++j) {
        add_clause({flip(some[i]), flip(some[j])});
      }
    }
  }

  auto ordering_vars = [&](int a, int b) {
    if (before_[static_cast<std::size_t>(a) * n_ + b] < 0) {
      const int ab = new_var(false, a, b);
      const int ba = new_var(false, b, a);
      before_[static_cast<std::size_t>(a) * n_ + b] = ab;
      before_[static_cast<std::size_t>(b) * n_ + a] = ba;
      in_edges_[b].push_back({a, ab});
      in_edges_[a].push_back({b, ba});
      add_clause({neg(ab), neg(ba)});
    }
    return std::make_pair(before_var(a, b), before_var(b, a));
  };

  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!p_.same_job_conflict(a, b)) continue;
      const auto [ab, ba] = ordering_vars(a, b);
      same_job_pairs_.emplace_back(a, b);
      if (!add_clause({pos(ab), pos(ba)})) return false;
    }
  }

  // Cross-job pairs that may land on one resource.
  std::vector<std::vector<std::pair<int, int>>> users(p_.resources.size());
  for (std::size_t s = 0; s < p_.slots.size(); ++s) {
    const auto& cands = p_.slots[s].candidates;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      users[cands[i]].emplace_back(static_cast<int>(s), alloc_var_[s][i]);
    }
  }
  for (const auto& list : users) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const int a = p_.slots[list[i].first].task;
        const int b = p_.slots[list[j].first].task;
        if (p_.tasks[a].job == p_.tasks[b].job) continue;
        const auto [ab, ba] = ordering_vars(std::min(a, b), std::max(a, b));
        add_clause({neg(list[i].second), neg(list[j].second), pos(ab),
                    pos(ba)});
      }
    }
  }

  // Interchangeable resources: the first use of a group member (in slot
  // order) precedes the first use of the next member.
  if (limits_.symmetry_breaking) {
    std::vector<int> rank(p_.slots.size());
    for (std::size_t i = 0; i < slot_order_.size(); ++i) {
      rank[slot_order_[i]] = static_cast<int>(i);
    }
    for (std::size_t r = 0; r + 1 < p_.resources.size(); ++r) {
      const std::size_t q = r + 1;
      if (p_.resources[q].group != p_.resources[r].group) continue;
      std::vector<std::pair<int, int>> slots;  // (rank, slot)
      for (const auto& [s, v] : users[r]) slots.emplace_back(rank[s], s);
      std::sort(slots.begin(), slots.end());
      auto var_of = [&](int s, int res) {
        const auto& c = p_.slots[s].candidates;
        const auto at = std::find(c.begin(), c.end(), res) - c.begin();
        return alloc_var_[s][at];
      };
      std::vector<Lit> earlier;  // r on some earlier slot
      for (const auto& [rk, s] : slots) {
        std::vector<Lit> clause = earlier;
        clause.push_back(neg(var_of(s, static_cast<int>(q))));
        if (!add_clause(std::move(clause))) return false;
        earlier.push_back(pos(var_of(s, static_cast<int>(r))));
      }
    }
  }
  return true;
}

void LearningSearch::enqueue(Lit l, int reason) {
  const int v = var(l);
  value_[v] = (l & 1) ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
  if (!(l & 1) && vars_[v].is_alloc) {
    const int s = vars_[v].a;
    const int r = vars_[v].b;
    slot_res_[s] = r;
    res_tasks_[r].push_back(p_.slots[s].task);
    load_[r] += duration(p_.slots[s].task);
    ++allocated_;
    energy_queue_.emplace_back(p_.slots[s].task, r);
  }
}

void LearningSearch::new_level() {
  trail_lim_.push_back(trail_.size());
  engine_.push();
}

void LearningSearch::cancel_until(int level) {
  if (decision_level() <= level) return;
  const std::size_t keep = trail_lim_[level];
  for (std::size_t i = trail_.size(); i-- > keep;) {
    const Lit l = trail_[i];
    const int v = var(l);
    if (!(l & 1) && vars_[v].is_alloc) {
      const int s = vars_[v].a;
      const int r = vars_[v].b;
      slot_res_[s] = -1;
      res_tasks_[r].pop_back();
      load_[r] -= duration(p_.slots[s].task);
      --allocated_;
    }
    value_[v] = 0;
    reason_[v] = kNoReason;
  }
  trail_.resize(keep);
  energy_queue_.clear();
  for (int d = decision_level(); d > level; --d) engine_.pop();
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

bool LearningSearch::propagate_clauses(Lit p) {
  const Lit false_lit = flip(p);
  auto& ws = watches_[false_lit];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ws.size()) {
    const int ci = ws[i++];
    Clause& c = clauses_[ci];
    if (c.deleted) continue;
    if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
    if (value(c.lits[0]) == 1) {
      ws[j++] = ci;
      continue;
    }
    bool moved = false;
    for (std::size_t k = 2; k < c.lits.size(); ++k) {
      if (value(c.lits[k]) != -1) {
        std::swap(c.lits[1], c.lits[k]);
        watches_[c.lits[1]].push_back(ci);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    ws[j++] = ci;
    if (value(c.lits[0]) == -1) {
      conflict_ = c.lits;
      while (i < ws.size()) ws[j++] = ws[i++];
      ws.resize(j);
      return false;
    }
    enqueue(c.lits[0], ci);
  }
  ws.resize(j);
  return true;
}

bool LearningSearch::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const int v = var(p);
    if (!(p & 1) && !vars_[v].is_alloc) {
      const int a = vars_[v].a;
      const int b = vars_[v].b;
      const dl::AssertResult r =
          engine_.assert_upper(tvar_[a], tvar_[b], -duration(a));
      if (!r) {
        conflict_.clear();
        for (const auto& c : r.cycle()) {
          if (c.x.is_zero() || c.y.is_zero()) continue;
          const int u = before_var(static_cast<int>(c.x.index),
                                   static_cast<int>(c.y.index));
          if (u >= 0 && value(pos(u)) == 1) conflict_.push_back(neg(u));
        }
        return false;
      }
    }
    if (!propagate_clauses(p)) return false;
  }
  if (!check_energy()) return false;
  return mode_ != SearchMode::kOptimize || check_objective();
}

void LearningSearch::explain_lower(int task, std::vector<Lit>& out) const {
  int v = task;
  while (lower(v) > 0) {
    int next = -1;
    for (const auto& [u, uv] : in_edges_[v]) {
      if (uv >= 0 && value(pos(uv)) != 1) continue;
      if (lower(u) + duration(u) == lower(v)) {
        if (uv >= 0) out.push_back(neg(uv));
        next = u;
        break;
      }
    }
    if (next < 0) throw std::logic_error("lower bound without a support path");
    v = next;
  }
}

int LearningSearch::alloc_var_of(int task, int res) const {
  for (int s : p_.tasks[task].slots) {
    const auto& c = p_.slots[s].candidates;
    const auto at = std::find(c.begin(), c.end(), res);
    if (at != c.end()) return alloc_var_[s][at - c.begin()];
  }
  throw std::logic_error("task cannot use the resource");
}

// A newly allocated task can only overload windows that contain its own.
bool LearningSearch::check_energy() {
  std::vector<int> inside;
  for (const auto& [task, r] : energy_queue_) {
    const auto& on = res_tasks_[r];
    for (int e : on) {
      if (est_[e] > est_[task]) continue;
      inside.clear();
      for (int t : on) {
        if (est_[t] >= est_[e]) inside.push_back(t);
      }
      std::sort(inside.begin(), inside.end(), [&](int a, int b) {
        return std::tie(lct_[a], a) < std::tie(lct_[b], b);
      });
      Minutes need = 0;
      for (std::size_t i = 0; i < inside.size(); ++i) {
        need += duration(inside[i]);
        if (lct_[inside[i]] < lct_[task]) continue;
        if (est_[e] + need > lct_[inside[i]]) {
          conflict_.clear();
          for (std::size_t k = 0; k <= i; ++k) {
            conflict_.push_back(neg(alloc_var_of(inside[k], r)));
          }
          energy_queue_.clear();
          return false;
        }
      }
    }
  }
  energy_queue_.clear();
  return true;
}

// Tasks of one job run one at a time, so the job cannot finish before the
// earliest start among any group of its tasks plus the group's work.
bool LearningSearch::check_objective() {
  if (incumbent_ == kNoIncumbent) return true;
  Minutes sum = 0;
  std::vector<std::vector<int>> support(p_.jobs.size());
  std::vector<int> by_start;
  for (std::size_t j = 0; j < p_.jobs.size(); ++j) {
    by_start = p_.jobs[j].tasks;
    std::sort(by_start.begin(), by_start.end(), [&](int a, int b) {
      return std::make_tuple(lower(a), a) > std::make_tuple(lower(b), b);
    });
    Minutes finish = 0;
    Minutes work = 0;
    std::size_t used = 0;
    for (std::size_t k = 0; k < by_start.size(); ++k) {
      work += duration(by_start[k]);
      if (lower(by_start[k]) + work > finish) {
        finish = lower(by_start[k]) + work;
        used = k + 1;
      }
    }
    if (finish > p_.jobs[j].deadline) {
      sum += finish - p_.jobs[j].deadline;
      support[j].assign(by_start.begin(), by_start.begin() + used);
    }
  }
  if (sum < incumbent_) return true;
  conflict_.clear();
  for (const auto& tasks : support) {
    for (int t : tasks) explain_lower(t, conflict_);
  }
  std::sort(conflict_.begin(), conflict_.end());
  conflict_.erase(std::unique(conflict_.begin(), conflict_.end()),
                  conflict_.end());
  return false;
}

void LearningSearch::analyze(std::vector<Lit>& learnt, int& back_level) {
  learnt.assign(1, 0);
  int counter = 0;
  Lit p = -1;
  std::size_t index = trail_.size();
  const std::vector<Lit>* lits = &conflict_;
  const int current = decision_level();

  while (true) {
    for (Lit q : *lits) {
      const int v = var(q);
      if (p >= 0 && v == var(p)) continue;
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      if (level_[v] == current) {
        ++counter;
      } else {
        learnt.push_back(q);
      }
    }
    do {
      --index;
    } while (!seen_[var(trail_[index])]);
    p = trail_[index];
    seen_[var(p)] = 0;
    if (--counter == 0) break;
    lits = &clauses_[reason_[var(p)]].lits;
  }
  learnt[0] = flip(p);

  back_level = 0;
  std::size_t at = 0;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    seen_[var(learnt[i])] = 0;
    if (level_[var(learnt[i])] > back_level) {
      back_level = level_[var(learnt[i])];
      at = i;
    }
  }
  if (at > 0) std::swap(learnt[1], learnt[at]);
}

bool LearningSearch::resolve_conflict() {
  ++stats_.failures;
  int top = 0;
  for (Lit l : conflict_) top = std::max(top, level_[var(l)]);
  if (top == 0) return false;
  cancel_until(top);

  std::vector<Lit> learnt;
  int back = 0;
  analyze(learnt, back);
  cancel_until(back);
  if (learnt.size() == 1) {
    enqueue(learnt[0], kNoReason);
    return true;
  }
  std::vector<int> levels;
  for (Lit l : learnt) levels.push_back(level_[var(l)]);
  std::sort(levels.begin(), levels.end());
  const int lbd = static_cast<int>(
      std::unique(levels.begin(), levels.end()) - levels.begin());

  const int ci = static_cast<int>(clauses_.size());
  watches_[learnt[0]].push_back(ci);
  watches_[learnt[1]].push_back(ci);
  const Lit asserting = learnt[0];
  clauses_.push_back({std::move(learnt), true, false, lbd});
  ++num_learnt_;
  enqueue(asserting, ci);
  return true;
}

void LearningSearch::reduce_db() {
  std::vector<int> cand;
  for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
    const Clause& c = clauses_[ci];
    if (!c.learnt || c.deleted || c.lbd <= 2) continue;
    const int v = var(c.lits[0]);
    if (reason_[v] == static_cast<int>(ci) && value(c.lits[0]) == 1) continue;
    cand.push_back(static_cast<int>(ci));
  }
  // Highest LBD first; among equals, the oldest.
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    return clauses_[a].lbd > clauses_[b].lbd;
  });
  for (std::size_t i = 0; i < cand.size() / 2; ++i) {
    Clause& c = clauses_[cand[i]];
    c.deleted = true;
    c.lits.clear();
    c.lits.shrink_to_fit();
    --num_learnt_;
  }
  max_learnt_ += max_learnt_ / 10;
}

std::optional<LearningSearch::Lit> LearningSearch::pick_branch() {
  // Allocation: the next slot in order takes the instance that frees up
  // first, then the least loaded, then the lowest index.
  if (allocated_ < static_cast<int>(p_.slots.size())) {
    for (int s : slot_order_) {
      if (slot_res_[s] >= 0) continue;
      int pick = -1;
      std::tuple<Minutes, Minutes, int> best_key{};
      const auto& cands = p_.slots[s].candidates;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        const int v = alloc_var_[s][i];
        if (value_[v] != 0) continue;
        const int r = cands[i];
        Minutes avail = 0;
        for (int u : res_tasks_[r]) {
          avail = std::max(avail, lower(u) + duration(u));
        }
        const std::tuple<Minutes, Minutes, int> key{avail, load_[r], r};
        if (pick < 0 || key < best_key) {
          pick = v;
          best_key = key;
        }
      }
      if (pick >= 0) return pos(pick);
    }
  }

  // Ordering: the open pair with least slack, roomier direction first.
  int best_var = -1;
  Minutes best_slack = 0;
  auto consider = [&](int a, int b) {
    const int ab = before_var(a, b);
    const int ba = before_var(b, a);
    if (ab < 0 || value_[ab] != 0 || value_[ba] != 0) return;
    const Minutes sab = upper(b) - lower(a) - duration(a);
    const Minutes sba = upper(a) - lower(b) - duration(b);
    const Minutes slack = std::min(sab, sba);
    if (best_var < 0 || slack < best_slack) {
      best_slack = slack;
      best_var = (sab > sba || (sab == sba && lower(a) <= lower(b))) ? ab : ba;
    }
  };
  for (const auto& tasks : res_tasks_) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      for (std::size_t j = i + 1; j < tasks.size(); ++j) {
        if (p_.tasks[tasks[i]].job != p_.tasks[tasks[j]].job) {
          consider(tasks[i], tasks[j]);
        }
      }
    }
  }
  for (const auto& [a, b] : same_job_pairs_) consider(a, b);
  if (best_var >= 0) return pos(best_var);

  // Everything that matters is decided; unassigned literals count as false.
  // A clause that needs one of them true gets a decision.
  for (const Clause& c : clauses_) {
    if (c.deleted) continue;
    bool sat = false;
    Lit open = -1;
    for (Lit l : c.lits) {
      const signed char val = value(l);
      if (val == 1 || (val == 0 && (l & 1))) {
        sat = true;
        break;
      }
      if (val == 0 && open < 0) open = l;
    }
    if (!sat && open >= 0) return open;
  }
  return std::nullopt;
}

void LearningSearch::record_solution() {
  Schedule sched;
  std::vector<Minutes> completion(p_.jobs.size(), 0);
  for (int t = 0; t < n_; ++t) {
    const auto& task = p_.tasks[t];
    Assignment a{task.ref.job, task.ref.op, lower(t), lower(t) + task.duration,
                 {}};
    for (int s : task.slots) {
      const auto& r = p_.resources[slot_res_[s]];
      a.resources.push_back({p_.classes[r.cls], r.index});
    }
    completion[task.job] = std::max(completion[task.job], a.end);
    sched.assignments.push_back(std::move(a));
  }
  Minutes total = 0;
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

bool LearningSearch::out_of_budget() {
  if (limits_.node_limit != 0 && stats_.nodes >= limits_.node_limit) {
    return true;
  }
  return limits_.deadline && (stats_.nodes & 63) == 0 &&
         Clock::now() >= *limits_.deadline;
}

SearchOutcome LearningSearch::run() {
  SearchOutcome out;
  bool exhausted = false;
  if (incumbent_ == 0 || !build()) {
    exhausted = true;
  } else {
    while (true) {
      if (out_of_budget()) {
        stopped_ = true;
        break;
      }
      ++stats_.nodes;
      if (!propagate()) {
        if (!resolve_conflict()) {
          exhausted = true;
          break;
        }
        continue;
      }
      if (static_cast<std::size_t>(num_learnt_) > max_learnt_) reduce_db();
      const std::optional<Lit> next = pick_branch();
      if (!next) {
        record_solution();
        if (mode_ == SearchMode::kDecide || incumbent_ == 0) {
          exhausted = mode_ == SearchMode::kOptimize;
          break;
        }
        cancel_until(0);
        continue;
      }
      new_level();
      enqueue(*next, kNoReason);
    }
  }
  out.exhausted = exhausted && !stopped_;
  out.best = std::move(best_);
  out.best_total = incumbent_;
  out.stats = stats_;
  return out;
}

}  // namespace mpfjss::detail
