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

#include "mpfjss/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graph_util.hpp"

namespace mpfjss {

const OperationSpec* Instance::find_operation(const std::string& id) const {
  for (const auto& op : operations) {
    if (op.id == id) return &op;
  }
  return nullptr;
}

const Demand* Instance::find_demand(const std::string& op) const {
  for (const auto& d : demands) {
    if (d.op == op) return &d;
  }
  return nullptr;
}

const JobSpec* Instance::find_job(const std::string& id) const {
  for (const auto& job : jobs) {
    if (job.id == id) return &job;
  }
  return nullptr;
}

const ResourceInstance* Instance::find_resource(
    const std::string& resource_class, int index) const {
  for (const auto& r : resources) {
    if (r.resource_class == resource_class && r.index == index) return &r;
  }
  return nullptr;
}

std::vector<TaskRef> tasks(const Instance& inst) {
  std::vector<TaskRef> out;
  for (const auto& job : inst.jobs) {
    for (const auto& op : job.ops) out.push_back({job.id, op});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* to_string(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::kNonPositiveDuration: return "non-positive-duration";
    case ViolationRule::kDuplicateOperation: return "duplicate-operation";
    case ViolationRule::kDuplicateResource: return "duplicate-resource";
    case ViolationRule::kDuplicateJob: return "duplicate-job";
    case ViolationRule::kUnknownOperation: return "unknown-operation";
    case ViolationRule::kUnknownClass: return "unknown-class";
    case ViolationRule::kMissingDemand: return "missing-demand";
    case ViolationRule::kForeignPrecedence: return "foreign-precedence";
    case ViolationRule::kCyclicPrecedence: return "cyclic-precedence";
    case ViolationRule::kNoCapableInstance: return "no-capable-instance";
  }
  return "unknown";
}

namespace {

void add(std::vector<InstanceViolation>& out, ViolationRule rule,
         std::vector<std::string> entities, std::string message) {
  out.push_back({rule, std::move(entities), std::move(message)});
}

}  // namespace

std::vector<InstanceViolation> validate_instance(const Instance& inst) {
  std::vector<InstanceViolation> out;

  std::set<std::string> op_ids;
  for (const auto& op : inst.operations) {
    if (!op_ids.insert(op.id).second) {
      add(out, ViolationRule::kDuplicateOperation, {op.id},
          "operation declared twice");
    }
    if (op.duration < 1) {
      add(out, ViolationRule::kNonPositiveDuration, {op.id},
          "duration must be at least 1");
    }
  }

  std::set<std::pair<std::string, int>> res_keys;
  std::set<std::string> classes;
  for (const auto& r : inst.resources) {
    const std::string name = r.resource_class + "/" + std::to_string(r.index);
    if (!res_keys.insert({r.resource_class, r.index}).second) {
      add(out, ViolationRule::kDuplicateResource, {r.resource_class, name},
          "resource instance declared twice");
    }
    classes.insert(r.resource_class);
    for (const auto& op : r.capabilities) {
      if (!op_ids.contains(op)) {
        add(out, ViolationRule::kUnknownOperation, {name, op},
            "capability names an undeclared operation");
      }
    }
  }

  for (const auto& d : inst.demands) {
    if (!op_ids.contains(d.op)) {
      add(out, ViolationRule::kUnknownOperation, {d.op},
          "demand for an undeclared operation");
    }
    for (const auto& c : d.classes) {
      if (!classes.contains(c)) {
        add(out, ViolationRule::kUnknownClass, {d.op, c},
            "demanded class has no declared instance");
      }
    }
  }

  std::set<std::string> job_ids;
  // (op, class) pairs already reported as lacking a capable instance.
  std::set<std::pair<std::string, std::string>> incapable;
  for (const auto& job : inst.jobs) {
    if (!job_ids.insert(job.id).second) {
      add(out, ViolationRule::kDuplicateJob, {job.id}, "job declared twice");
    }
    std::set<std::string> job_ops(job.ops.begin(), job.ops.end());
    for (const auto& op : job.ops) {
      if (!op_ids.contains(op)) {
        add(out, ViolationRule::kUnknownOperation, {job.id, op},
            "job references an undeclared operation");
        continue;
      }
      const Demand* demand = inst.find_demand(op);
      if (demand == nullptr) {
        add(out, ViolationRule::kMissingDemand, {job.id, op},
            "operation has no demand entry");
        continue;
      }
      for (const auto& c : demand->classes) {
        if (!classes.contains(c) || incapable.contains({op, c})) continue;
        const bool capable = std::any_of(
            inst.resources.begin(), inst.resources.end(), [&](const auto& r) {
              return r.resource_class == c &&
                     std::find(r.capabilities.begin(), r.capabilities.end(),
                               op) != r.capabilities.end();
            });
        if (!capable) {
          incapable.insert({op, c});
          add(out, ViolationRule::kNoCapableInstance, {op, c},
              "no instance of the demanded class can run the operation");
        }
      }
    }

    bool foreign = false;
    for (const auto& [a, b] : job.precedence) {
      for (const auto& end : {a, b}) {
        if (!job_ops.contains(end)) {
          foreign = true;
          add(out, ViolationRule::kForeignPrecedence, {job.id, end},
              "precedence names an operation outside the job");
        }
      }
    }
    if (!foreign && detail::has_cycle(job.ops, job.precedence)) {
      add(out, ViolationRule::kCyclicPrecedence, {job.id},
          "precedence relation is cyclic");
    }
  }
  return out;
}

Minutes total_duration(const Instance& inst) {
  std::map<std::string, Minutes> duration;
  for (const auto& op : inst.operations) duration[op.id] = op.duration;
  Minutes total = 0;
  for (const auto& job : inst.jobs) {
    for (const auto& op : job.ops) {
      auto it = duration.find(op);
      if (it != duration.end()) total += it->second;
    }
  }
  return total;
}

}  // namespace mpfjss
