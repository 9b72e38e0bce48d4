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

#include "mpfjss/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpfjss/dl_engine.hpp"
#include "learning_search.hpp"
#include "problem.hpp"
#include "search.hpp"

namespace mpfjss {

using detail::Problem;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kSat: return "SAT";
    case Verdict::kUnsat: return "UNSAT";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

// Resource chosen for every slot; throws for a partial or incapable
// allocation.
std::vector<int> resolve(const Problem& p, const Allocation& alloc) {
  std::vector<int> chosen(p.slots.size(), -1);
  for (std::size_t s = 0; s < p.slots.size(); ++s) {
    const auto& slot = p.slots[s];
    const auto& ref = p.tasks[slot.task].ref;
    const SlotKey key{ref.job, ref.op, p.classes[slot.cls]};
    auto it = alloc.find(key);
    if (it == alloc.end()) {
      throw std::invalid_argument("allocation misses " + ref.job + "/" +
                                  ref.op + " class " + key.resource_class);
    }
    const int r = p.resource_index(key.resource_class, it->second);
    if (std::find(slot.candidates.begin(), slot.candidates.end(), r) ==
        slot.candidates.end()) {
      throw std::invalid_argument("allocated instance cannot run " + ref.op);
    }
    chosen[s] = r;
  }
  return chosen;
}

std::vector<std::pair<int, int>> conflict_indices(
    const Problem& p, const std::vector<int>& chosen) {
  std::vector<std::pair<int, int>> out;
  const int n = p.num_tasks();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (p.tasks[a].job == p.tasks[b].job) {
        if (p.same_job_conflict(a, b)) out.emplace_back(a, b);
        continue;
      }
      bool share = false;
      for (int sa : p.tasks[a].slots) {
        for (int sb : p.tasks[b].slots) share |= chosen[sa] == chosen[sb];
      }
      if (share) out.emplace_back(a, b);
    }
  }
  return out;
}

template <typename Engine>
detail::SearchOutcome run_with(const Problem& p, Minutes cap,
                               detail::SearchMode mode,
                               const SearchLimits& limits,
                               const Instance& inst,
                               const Schedule* incumbent) {
  Engine search(p, cap, mode, limits);
  if (incumbent != nullptr) {
    Schedule seed = *incumbent;
    fill_tardiness(inst, seed);
    const Minutes total = seed.total_tardiness;
    search.set_incumbent(total, std::move(seed));
  }
  return search.run();
}

detail::SearchOutcome run_search(const Instance& inst, Minutes cap,
                                 detail::SearchMode mode,
                                 const SearchLimits& limits,
                                 const Schedule* incumbent) {
  if (cap < 0) throw std::invalid_argument("tardiness cap must be >= 0");
  const Problem p = detail::compile(inst);
  if (limits.engine == SearchEngine::kDepthFirst) {
    return run_with<detail::Search>(p, cap, mode, limits, inst, incumbent);
  }
  return run_with<detail::LearningSearch>(p, cap, mode, limits, inst,
                                          incumbent);
}

}  // namespace

std::set<TaskPair> conflict_pairs(const Instance& inst,
                                  const Allocation& alloc) {
  const Problem p = detail::compile(inst);
  std::set<TaskPair> out;
  for (const auto& [a, b] : conflict_indices(p, resolve(p, alloc))) {
    out.insert({p.tasks[a].ref, p.tasks[b].ref});
  }
  return out;
}

Allocation allocation_of(const Schedule& sched) {
  Allocation alloc;
  for (const auto& a : sched.assignments) {
    for (const auto& r : a.resources) {
      alloc[{a.job, a.op, r.resource_class}] = r.index;
    }
  }
  return alloc;
}

std::optional<Schedule> start_times_from_order(
    const Instance& inst, const Allocation& alloc,
    const std::vector<DirectedPair>& order) {
  const Problem p = detail::compile(inst);
  const std::vector<int> chosen = resolve(p, alloc);
  const int n = p.num_tasks();

  std::vector<char> directed(static_cast<std::size_t>(n) * n, 0);
  dl::Engine engine;
  std::vector<dl::Var> var;
  for (int t = 0; t < n; ++t) {
    var.push_back(engine.new_var());
    engine.assert_upper(dl::Var::zero(), var[t], 0);
  }
  auto edge = [&](int a, int b) {
    engine.assert_upper(var[a], var[b], -p.tasks[a].duration);
  };
  for (const auto& [a, b] : p.precedence) edge(a, b);
  for (const auto& d : order) {
    const int a = p.task_index(d.before);
    const int b = p.task_index(d.after);
    if (a < 0 || b < 0) {
      throw std::invalid_argument("ordering names an unknown task");
    }
    directed[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)] = 1;
    edge(a, b);
  }
  for (const auto& [a, b] : conflict_indices(p, chosen)) {
    if (!directed[static_cast<std::size_t>(a) * n + b]) {
      throw std::invalid_argument("conflict pair " + p.tasks[a].ref.job +
                                  "/" + p.tasks[a].ref.op + ", " +
                                  p.tasks[b].ref.job + "/" +
                                  p.tasks[b].ref.op + " is not ordered");
    }
  }
  if (!engine.feasible()) return std::nullopt;

  const std::vector<dl::Weight> start = engine.solution();
  Schedule sched;
  for (int t = 0; t < n; ++t) {
    const auto& task = p.tasks[t];
    Assignment a{task.ref.job, task.ref.op, start[t], start[t] + task.duration,
                 {}};
    for (int s : task.slots) {
      const auto& r = p.resources[chosen[s]];
      a.resources.push_back({p.classes[r.cls], r.index});
    }
    sched.assignments.push_back(std::move(a));
  }
  fill_tardiness(inst, sched);
  return sched;
}

DecideResult decide(const Instance& inst, Minutes cap,
                    const SearchLimits& limits) {
  detail::SearchOutcome out =
      run_search(inst, cap, detail::SearchMode::kDecide, limits, nullptr);
  DecideResult result;
  result.stats = out.stats;
  if (out.best) {
    result.verdict = Verdict::kSat;
    result.schedule = std::move(out.best);
  } else {
    result.verdict = out.exhausted ? Verdict::kUnsat : Verdict::kUnknown;
  }
  return result;
}

OptimizeResult optimize(const Instance& inst, Minutes cap,
                        const SearchLimits& limits,
                        const Schedule* incumbent) {
  detail::SearchOutcome out = run_search(
      inst, cap, detail::SearchMode::kOptimize, limits, incumbent);
  OptimizeResult result;
  result.stats = out.stats;
  result.best = std::move(out.best);
  result.proven_optimal = out.exhausted && result.best.has_value();
  if (result.best) result.best->proven_optimal = result.proven_optimal;
  return result;
}

}  // namespace mpfjss
