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

#include "mpfjss/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace mpfjss {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDemandUnmet: return "demand-unmet";
    case ViolationKind::kPreemptionOrNegativeTime:
      return "preemption-or-negative-time";
    case ViolationKind::kSameJobOverlap: return "same-job-overlap";
    case ViolationKind::kResourceOverlap: return "resource-overlap";
    case ViolationKind::kPrecedenceOrder: return "precedence-order";
    case ViolationKind::kTardinessMiscomputed: return "tardiness-miscomputed";
    case ViolationKind::kStructural: return "structural";
  }
  return "unknown";
}

namespace {

std::string task_name(const Assignment& a) { return a.job + "/" + a.op; }

std::string res_name(const ResourceRef& r) {
  return r.resource_class + "/" + std::to_string(r.index);
}

bool intersects(Minutes s1, Minutes e1, Minutes s2, Minutes e2) {
  return s1 < e2 && s2 < e1;
}

// Occupied interval: the operation's true duration from its start, so a
// wrong `end` field is reported once, as preemption, and not again as an
// overlap or a tardiness error.
std::map<std::string, Minutes> durations_of(const Instance& inst) {
  std::map<std::string, Minutes> d;
  for (const auto& op : inst.operations) d[op.id] = op.duration;
  return d;
}

Minutes finish(const Assignment& a,
               const std::map<std::string, Minutes>& durations) {
  auto it = durations.find(a.op);
  return it == durations.end() ? a.end : a.start + it->second;
}

}  // namespace

Minutes total_tardiness(const Instance& inst, const Schedule& sched) {
  const auto durations = durations_of(inst);
  Minutes total = 0;
  for (const auto& job : inst.jobs) {
    Minutes completion = 0;
    for (const auto& a : sched.assignments) {
      if (a.job == job.id) completion = std::max(completion, finish(a, durations));
    }
    total += std::max<Minutes>(0, completion - job.deadline);
  }
  return total;
}

std::vector<Violation> check_schedule(const Instance& inst,
                                      const Schedule& sched) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, std::vector<std::string> entities,
                    std::string detail) {
    out.push_back({kind, std::move(entities), std::move(detail)});
  };
  const auto durations = durations_of(inst);

  // Structure: every assignment is a known task, each task exactly once.
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<const Assignment*> known;
  for (const auto& a : sched.assignments) {
    const JobSpec* job = inst.find_job(a.job);
    const bool in_recipe =
        job != nullptr &&
        std::find(job->ops.begin(), job->ops.end(), a.op) != job->ops.end() &&
        durations.contains(a.op);
    if (!in_recipe) {
      report(ViolationKind::kStructural, {task_name(a)},
             "assignment names no task of the instance");
      continue;
    }
    if (!seen.insert({a.job, a.op}).second) {
      report(ViolationKind::kStructural, {task_name(a)},
             "task assigned more than once");
      continue;
    }
    bool alien_resource = false;
    for (const auto& r : a.resources) {
      if (inst.find_resource(r.resource_class, r.index) == nullptr) {
        report(ViolationKind::kStructural, {task_name(a), res_name(r)},
               "unknown resource instance");
        alien_resource = true;
      }
    }
    if (!alien_resource) known.push_back(&a);
  }
  for (const auto& job : inst.jobs) {
    for (const auto& op : job.ops) {
      if (!seen.contains({job.id, op})) {
        report(ViolationKind::kStructural, {job.id + "/" + op},
               "task is not scheduled");
      }
    }
  }

  // Demands: one capable instance per demanded class, nothing else.
  for (const Assignment* a : known) {
    const Demand* demand = inst.find_demand(a->op);
    std::vector<std::string> wanted =
        demand == nullptr ? std::vector<std::string>{} : demand->classes;
    std::map<std::string, int> per_class;
    for (const auto& r : a->resources) {
      ++per_class[r.resource_class];
      const ResourceInstance* inst_r =
          inst.find_resource(r.resource_class, r.index);
      const auto& caps = inst_r->capabilities;
      if (std::find(caps.begin(), caps.end(), a->op) == caps.end()) {
        report(ViolationKind::kDemandUnmet, {task_name(*a), res_name(r)},
               "resource cannot execute the operation");
      }
    }
    for (const auto& c : wanted) {
      const int n = per_class.contains(c) ? per_class.at(c) : 0;
      if (n != 1) {
        report(ViolationKind::kDemandUnmet, {task_name(*a), c},
               "expected exactly one instance of the class, got " +
                   std::to_string(n));
      }
      per_class.erase(c);
    }
    for (const auto& [c, n] : per_class) {
      report(ViolationKind::kDemandUnmet, {task_name(*a), c},
             "class is not demanded by the operation");
    }
  }

  for (const Assignment* a : known) {
    const Minutes p = durations.at(a->op);
    if (a->start < 0) {
      report(ViolationKind::kPreemptionOrNegativeTime, {task_name(*a)},
             "negative start time " + std::to_string(a->start));
    }
    if (a->end != a->start + p) {
      report(ViolationKind::kPreemptionOrNegativeTime, {task_name(*a)},
             "end " + std::to_string(a->end) + " != start + duration " +
                 std::to_string(a->start + p));
    }
  }

  for (std::size_t i = 0; i < known.size(); ++i) {
    const Assignment& a = *known[i];
    const Minutes ea = finish(a, durations);
    for (std::size_t j = i + 1; j < known.size(); ++j) {
      const Assignment& b = *known[j];
      const Minutes eb = finish(b, durations);
      if (!intersects(a.start, ea, b.start, eb)) continue;
      if (a.job == b.job) {
        report(ViolationKind::kSameJobOverlap, {task_name(a), task_name(b)},
               "operations of one job overlap");
      }
      for (const auto& r : a.resources) {
        if (std::find(b.resources.begin(), b.resources.end(), r) !=
            b.resources.end()) {
          report(ViolationKind::kResourceOverlap,
                 {res_name(r), task_name(a), task_name(b)},
                 "resource instance used by two overlapping operations");
        }
      }
    }
  }

  std::map<std::pair<std::string, std::string>, const Assignment*> by_task;
  for (const Assignment* a : known) by_task[{a->job, a->op}] = a;
  for (const auto& job : inst.jobs) {
    for (const auto& [before, after] : job.precedence) {
      auto ia = by_task.find({job.id, before});
      auto ib = by_task.find({job.id, after});
      if (ia == by_task.end() || ib == by_task.end()) continue;
      if (ib->second->start < ia->second->start) {
        report(ViolationKind::kPrecedenceOrder,
               {job.id, before, after},
               "start of " + after + " precedes start of " + before);
      }
    }
  }

  Minutes total = 0;
  for (const auto& job : inst.jobs) {
    Minutes completion = 0;
    for (const auto& a : sched.assignments) {
      if (a.job == job.id) {
        completion = std::max(completion, finish(a, durations));
      }
    }
    const Minutes late = std::max<Minutes>(0, completion - job.deadline);
    total += late;
    auto it = sched.tardiness.find(job.id);
    if (it == sched.tardiness.end() || it->second != late) {
      report(ViolationKind::kTardinessMiscomputed, {job.id},
             "tardiness should be " + std::to_string(late));
    }
  }
  for (const auto& [job, late] : sched.tardiness) {
    if (inst.find_job(job) == nullptr) {
      report(ViolationKind::kTardinessMiscomputed, {job},
             "tardiness reported for an unknown job");
    }
  }
  if (sched.total_tardiness != total) {
    report(ViolationKind::kTardinessMiscomputed, {"total"},
           "total tardiness should be " + std::to_string(total));
  }
  return out;
}

std::string to_json_text(const std::vector<Violation>& violations,
                         int indent) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& v : violations) {
    doc.push_back({{"kind", to_string(v.kind)},
                   {"entities", v.entities},
                   {"detail", v.detail}});
  }
  return doc.dump(indent);
}

}  // namespace mpfjss
