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

#ifndef MPFJSS_INSTANCE_HPP_
#define MPFJSS_INSTANCE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mpfjss {

// All times in the library are integer minutes measured from shift start.
using Minutes = std::int64_t;

struct OperationSpec {
  std::string id;
  Minutes duration = 1;

  friend bool operator==(const OperationSpec&, const OperationSpec&) = default;
};

// One concrete resource: instance `index` of `resource_class`, able to run
// the operations listed in `capabilities`.
struct ResourceInstance {
  std::string resource_class;
  int index = 1;
  std::vector<std::string> capabilities;

  friend bool operator==(const ResourceInstance&,
                         const ResourceInstance&) = default;
};

// The resource classes an operation needs simultaneously, one instance each.
struct Demand {
  std::string op;
  std::vector<std::string> classes;

  friend bool operator==(const Demand&, const Demand&) = default;
};

struct JobSpec {
  std::string id;
  std::vector<std::string> ops;
  // (before, after) pairs over `ops`.
  std::vector<std::pair<std::string, std::string>> precedence;
  Minutes deadline = 0;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

// An MPF-JSS instance. Plain data; collections keep first-declaration order,
// which is also the canonical serialization order.
struct Instance {
  std::vector<OperationSpec> operations;
  std::vector<ResourceInstance> resources;
  std::vector<Demand> demands;
  std::vector<JobSpec> jobs;

  const OperationSpec* find_operation(const std::string& id) const;
  const Demand* find_demand(const std::string& op) const;
  const JobSpec* find_job(const std::string& id) const;
  const ResourceInstance* find_resource(const std::string& resource_class,
                                        int index) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// A schedulable unit. Operation ids name process types and may recur across
// jobs, so a task is always identified by the (job, op) pair.
struct TaskRef {
  std::string job;
  std::string op;

  friend auto operator<=>(const TaskRef&, const TaskRef&) = default;
  friend bool operator==(const TaskRef&, const TaskRef&) = default;
};

// One entry per (job, op), sorted by job id then op id.
std::vector<TaskRef> tasks(const Instance& inst);

enum class ViolationRule {
  kNonPositiveDuration,
  kDuplicateOperation,
  kDuplicateResource,
  kDuplicateJob,
  kUnknownOperation,   // a capability, demand, recipe or precedence names an undeclared op
  kUnknownClass,       // a demanded class has no declared instance
  kMissingDemand,      // a job op has no demand entry
  kForeignPrecedence,  // a precedence pair names an op outside the job
  kCyclicPrecedence,
  kNoCapableInstance,  // (op, class) demanded but no instance of class can run op
};

const char* to_string(ViolationRule rule);

struct InstanceViolation {
  ViolationRule rule;
  // Entities involved, e.g. {"o1", "m"} or {"j1", "o9"}.
  std::vector<std::string> entities;
  std::string message;
};

// Structural check; an empty result means every model invariant holds.
std::vector<InstanceViolation> validate_instance(const Instance& inst);

// Sum of the durations of every (job, op) task: a serial schedule finishes
// all jobs by this time.
Minutes total_duration(const Instance& inst);

}  // namespace mpfjss

#endif  // MPFJSS_INSTANCE_HPP_
