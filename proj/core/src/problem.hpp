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

#ifndef MPFJSS_SRC_PROBLEM_HPP_
#define MPFJSS_SRC_PROBLEM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "mpfjss/instance.hpp"

namespace mpfjss::detail {

// Index-based view of an instance, built once per solve.
struct Problem {
  struct Task {
    TaskRef ref;
    int job = 0;
    Minutes duration = 0;
    std::vector<int> slots;
  };
  // One demanded class of one task.
  struct Slot {
    int task = 0;
    int cls = 0;
    std::vector<int> candidates;  // capable resources, ascending index
  };
  struct Resource {
    int cls = 0;
    int index = 0;
    // Interchangeable resources (same class and capabilities) share a group.
    int group = 0;
  };
  struct Job {
    std::string id;
    Minutes deadline = 0;
    std::vector<int> tasks;
    Minutes work = 0;
  };

  std::vector<Task> tasks;  // in tasks() order
  std::vector<Slot> slots;
  std::vector<Resource> resources;
  std::vector<std::string> classes;
  std::vector<Job> jobs;
  std::vector<std::pair<int, int>> precedence;  // direct (before, after)
  std::vector<char> closure;  // closure[a * n + b]: a transitively precedes b

  int num_tasks() const { return static_cast<int>(tasks.size()); }
  bool precedes(int a, int b) const {
    return closure[static_cast<std::size_t>(a) * tasks.size() + b] != 0;
  }
  // Same job and unordered by precedence.
  bool same_job_conflict(int a, int b) const {
    return a != b && tasks[a].job == tasks[b].job && !precedes(a, b) &&
           !precedes(b, a);
  }
  int task_index(const TaskRef& ref) const;  // -1 if absent
  int resource_index(const std::string& cls, int index) const;  // -1 if absent
};

// Throws UnsolvableInstance or std::invalid_argument.
Problem compile(const Instance& inst);

}  // namespace mpfjss::detail

#endif  // MPFJSS_SRC_PROBLEM_HPP_
