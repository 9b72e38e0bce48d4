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

#include "mpfjss/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace mpfjss {

namespace {

struct OTask {
  int job;
  Minutes duration;
  std::string op;
  std::uint64_t preds = 0;  // direct predecessors within the job
  // Per demanded class: (class name, capable instance ids).
  std::vector<std::pair<std::string, std::vector<int>>> classes;
};

struct OJob {
  std::string id;
  Minutes deadline;
};

class Enumerator {
 public:
  Enumerator(std::vector<OTask> tasks, std::vector<OJob> jobs, int resources,
             const OracleBudget& budget)
      : tasks_(std::move(tasks)),
        jobs_(std::move(jobs)),
        budget_(budget),
        job_end_(jobs_.size(), 0),
        remaining_(jobs_.size(), 0),
        res_end_(resources, 0),
        start_(tasks_.size(), 0),
        pick_(tasks_.size()),
        best_pick_(tasks_.size()),
        best_start_(tasks_.size(), 0) {
    for (const auto& t : tasks_) remaining_[t.job] += t.duration;
  }

  void run() { dfs(0, -1, -1); }

  Minutes best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Minutes>& best_start() const { return best_start_; }
  const std::vector<std::vector<int>>& best_pick() const { return best_pick_; }

 private:
  Minutes lower_bound() const {
    Minutes total = 0;
    for (std::size_t j = 0; j < jobs_.size(); ++j) {
      const Minutes c = job_end_[j] + remaining_[j];
      total += std::max<Minutes>(0, c - jobs_[j].deadline);
    }
    return total;
  }

  void dfs(std::uint64_t placed, Minutes last_start, int last_task) {
    if (++nodes_ > budget_.node_limit) {
      throw OracleBudgetExceeded("oracle node limit reached");
    }
    if (lower_bound() >= best_) return;
    const int n = static_cast<int>(tasks_.size());
    if (placed == (n == 64 ? ~0ULL : (1ULL << n) - 1)) {
      // Every job is finished, so the bound is exact.
      best_ = lower_bound();
      best_start_ = start_;
      best_pick_ = pick_;
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (placed >> t & 1) continue;
      if ((tasks_[t].preds & placed) != tasks_[t].preds) continue;
      pick_[t].assign(tasks_[t].classes.size(), -1);
      allocate(t, 0, placed, last_start, last_task);
    }
  }

  // Chooses an instance for class slot `c` of task `t`, then places it.
  void allocate(int t, std::size_t c, std::uint64_t placed, Minutes last_start,
                int last_task) {
    OTask& task = tasks_[t];
    if (c < task.classes.size()) {
      for (int r : task.classes[c].second) {
        pick_[t][c] = r;
        allocate(t, c + 1, placed, last_start, last_task);
      }
      return;
    }
    Minutes s = job_end_[task.job];
    for (int r : pick_[t]) s = std::max(s, res_end_[r]);
    if (budget_.canonical_order &&
        (s < last_start || (s == last_start && t < last_task))) {
      return;
    }
    const Minutes e = s + task.duration;
    const Minutes saved_job = job_end_[task.job];
    std::vector<Minutes> saved_res;
    for (int r : pick_[t]) saved_res.push_back(res_end_[r]);

    job_end_[task.job] = e;
    remaining_[task.job] -= task.duration;
    for (int r : pick_[t]) res_end_[r] = e;
    start_[t] = s;
    dfs(placed | (1ULL << t), s, t);
    for (std::size_t i = pick_[t].size(); i-- > 0;) {
      res_end_[pick_[t][i]] = saved_res[i];
    }
    remaining_[task.job] += task.duration;
    job_end_[task.job] = saved_job;
  }

  std::vector<OTask> tasks_;
  std::vector<OJob> jobs_;
  OracleBudget budget_;
  std::vector<Minutes> job_end_;
  std::vector<Minutes> remaining_;
  std::vector<Minutes> res_end_;
  std::vector<Minutes> start_;
  std::vector<std::vector<int>> pick_;
  std::vector<std::vector<int>> best_pick_;
  std::vector<Minutes> best_start_;
  Minutes best_ = std::numeric_limits<Minutes>::max();
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force_optimal(const Instance& inst,
                                 const OracleBudget& budget) {
  if (!validate_instance(inst).empty()) {
    // Capability gaps are reported separately below.
    for (const auto& v : validate_instance(inst)) {
      if (v.rule != ViolationRule::kNoCapableInstance &&
          v.rule != ViolationRule::kUnknownClass) {
        throw std::invalid_argument("invalid instance: " + v.message);
      }
    }
  }
  if (static_cast<int>(inst.jobs.size()) > budget.max_jobs) {
    throw OracleBudgetExceeded("too many jobs for the oracle");
  }

  std::map<std::string, Minutes> duration;
  for (const auto& o : inst.operations) duration[o.id] = o.duration;

  std::vector<OJob> jobs;
  std::vector<OTask> tasks;
  Minutes work = 0;
  Minutes latest = 0;
  for (const auto& j : inst.jobs) {
    const int jid = static_cast<int>(jobs.size());
    jobs.push_back({j.id, j.deadline});
    latest = std::max(latest, j.deadline);
    std::vector<std::string> ops = j.ops;
    std::sort(ops.begin(), ops.end());
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    std::map<std::string, int> local;
    for (const auto& op : ops) {
      local[op] = static_cast<int>(tasks.size());
      tasks.push_back({jid, duration.at(op), op, 0, {}});
      work += duration.at(op);
    }
    for (const auto& [a, b] : j.precedence) {
      tasks[local.at(b)].preds |= 1ULL << local.at(a);
    }
    if (static_cast<int>(tasks.size()) > budget.max_tasks ||
        tasks.size() > 64) {
      throw OracleBudgetExceeded("too many tasks for the oracle");
    }
  }
  if (latest + work > budget.horizon) {
    throw OracleBudgetExceeded("horizon too small for the instance");
  }

  // Resource ids in declaration order; names kept for the witness.
  std::vector<std::pair<std::string, int>> names;
  for (const auto& r : inst.resources) {
    names.emplace_back(r.resource_class, r.index);
  }
  for (auto& t : tasks) {
    const Demand* d = inst.find_demand(t.op);
    std::vector<std::string> classes = d->classes;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (const auto& cls : classes) {
      std::vector<int> capable;
      for (std::size_t r = 0; r < inst.resources.size(); ++r) {
        const auto& res = inst.resources[r];
        if (res.resource_class != cls) continue;
        if (std::find(res.capabilities.begin(), res.capabilities.end(),
                      t.op) != res.capabilities.end()) {
          capable.push_back(static_cast<int>(r));
        }
      }
      if (capable.empty()) {
        throw std::runtime_error("no " + cls + " instance can run " + t.op);
      }
      t.classes.emplace_back(cls, std::move(capable));
    }
  }

  Enumerator en(tasks, jobs, static_cast<int>(inst.resources.size()), budget);
  en.run();

  OracleResult out;
  out.nodes = en.nodes();
  out.optimum = en.best();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    Assignment a;
    a.job = jobs[tasks[t].job].id;
    a.op = tasks[t].op;
    a.start = en.best_start()[t];
    a.end = a.start + tasks[t].duration;
    for (int r : en.best_pick()[t]) {
      a.resources.push_back({names[r].first, names[r].second});
    }
    out.witness.assignments.push_back(std::move(a));
  }
  Minutes total = 0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    Minutes end = 0;
    for (const auto& a : out.witness.assignments) {
      if (a.job == jobs[j].id) end = std::max(end, a.end);
    }
    const Minutes tard = std::max<Minutes>(0, end - jobs[j].deadline);
    out.witness.tardiness[jobs[j].id] = tard;
    total += tard;
  }
  out.witness.total_tardiness = total;
  out.witness.proven_optimal = true;
  return out;
}

}  // namespace mpfjss
