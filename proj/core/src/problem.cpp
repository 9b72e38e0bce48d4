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

#include "problem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "mpfjss/scheduler.hpp"

namespace mpfjss::detail {

int Problem::task_index(const TaskRef& ref) const {
  auto it = std::lower_bound(
      tasks.begin(), tasks.end(), ref,
      [](const Task& t, const TaskRef& r) { return t.ref < r; });
  if (it == tasks.end() || it->ref != ref) return -1;
  return static_cast<int>(it - tasks.begin());
}

int Problem::resource_index(const std::string& cls, int index) const {
  for (std::size_t r = 0; r < resources.size(); ++r) {
    if (classes[resources[r].cls] == cls && resources[r].index == index) {
      return static_cast<int>(r);
    }
  }
  return -1;
}

Problem compile(const Instance& inst) {
  for (const auto& v : validate_instance(inst)) {
    if (v.rule == ViolationRule::kNoCapableInstance ||
        v.rule == ViolationRule::kUnknownClass) {
      continue;  // handled per slot below
    }
    throw std::invalid_argument(std::string("invalid instance: ") +
                                to_string(v.rule) + ": " + v.message);
  }

  Problem p;
  std::map<std::string, int> class_at;
  auto class_id = [&](const std::string& c) {
    auto [it, fresh] = class_at.emplace(c, static_cast<int>(p.classes.size()));
    if (fresh) p.classes.push_back(c);
    return it->second;
  };

  // Resources sorted by (class, index); groups by identical capability sets.
  std::vector<const ResourceInstance*> res;
  for (const auto& r : inst.resources) res.push_back(&r);
  std::sort(res.begin(), res.end(), [](const auto* a, const auto* b) {
    return std::tie(a->resource_class, a->index) <
           std::tie(b->resource_class, b->index);
  });
  std::map<std::pair<std::string, std::set<std::string>>, int> group_at;
  std::vector<std::set<std::string>> caps;
  for (const auto* r : res) {
    std::set<std::string> cap(r->capabilities.begin(), r->capabilities.end());
    const int group =
        group_at.emplace(std::make_pair(r->resource_class, cap),
                         static_cast<int>(group_at.size()))
            .first->second;
    p.resources.push_back({class_id(r->resource_class), r->index, group});
    caps.push_back(std::move(cap));
  }

  std::map<std::string, Minutes> duration;
  for (const auto& op : inst.operations) duration[op.id] = op.duration;

  std::map<std::string, int> job_at;
  for (const auto& job : inst.jobs) {
    job_at[job.id] = static_cast<int>(p.jobs.size());
    p.jobs.push_back({job.id, job.deadline, {}, 0});
  }

  for (const TaskRef& ref : tasks(inst)) {
    const int t = static_cast<int>(p.tasks.size());
    Problem::Task task{ref, job_at.at(ref.job), duration.at(ref.op), {}};
    const Demand* demand = inst.find_demand(ref.op);
    for (const auto& c : demand->classes) {
      Problem::Slot slot{t, class_id(c), {}};
      for (std::size_t r = 0; r < p.resources.size(); ++r) {
        if (p.resources[r].cls == slot.cls && caps[r].contains(ref.op)) {
          slot.candidates.push_back(static_cast<int>(r));
        }
      }
      if (slot.candidates.empty()) {
        throw UnsolvableInstance("no instance of class " + c +
                                 " can execute " + ref.op + " of job " +
                                 ref.job);
      }
      task.slots.push_back(static_cast<int>(p.slots.size()));
      p.slots.push_back(std::move(slot));
    }
    Problem::Job& job = p.jobs[task.job];
    job.tasks.push_back(t);
    job.work += task.duration;
    p.tasks.push_back(std::move(task));
  }

  const std::size_t n = p.tasks.size();
  p.closure.assign(n * n, 0);
  for (const auto& job : inst.jobs) {
    for (const auto& [a, b] : job.precedence) {
      const int ta = p.task_index({job.id, a});
      const int tb = p.task_index({job.id, b});
      p.precedence.emplace_back(ta, tb);
      p.closure[static_cast<std::size_t>(ta) * n + tb] = 1;
    }
  }
  // Floyd-Warshall restricted to each job's tasks.
  for (const auto& job : p.jobs) {
    for (int k : job.tasks) {
      for (int i : job.tasks) {
        if (!p.closure[i * n + k]) continue;
        for (int j : job.tasks) {
          if (p.closure[k * n + j]) p.closure[i * n + j] = 1;
        }
      }
    }
  }
  return p;
}

}  // namespace mpfjss::detail
