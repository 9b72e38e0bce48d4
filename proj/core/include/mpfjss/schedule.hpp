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

#ifndef MPFJSS_SCHEDULE_HPP_
#define MPFJSS_SCHEDULE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mpfjss/instance.hpp"

namespace mpfjss {

struct ResourceRef {
  std::string resource_class;
  int index = 0;

  friend auto operator<=>(const ResourceRef&, const ResourceRef&) = default;
  friend bool operator==(const ResourceRef&, const ResourceRef&) = default;
};

struct Assignment {
  std::string job;
  std::string op;
  Minutes start = 0;
  Minutes end = 0;
  std::vector<ResourceRef> resources;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Schedule {
  std::vector<Assignment> assignments;
  // Reported per-job tardiness and their sum. Solvers fill these in with
  // fill_tardiness(); the validator recomputes them independently.
  std::map<std::string, Minutes> tardiness;
  Minutes total_tardiness = 0;
  bool proven_optimal = false;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Recomputes tardiness and total_tardiness from the assignments.
void fill_tardiness(const Instance& inst, Schedule& sched);

// JSON object with `assignments`, `tardiness`, `total_tardiness` and
// `proven_optimal`.
std::string to_json_text(const Schedule& sched, int indent = 2);
// Accepts a schedule object, or any object embedding one under "schedule"
// (as solve reports do). Throws std::invalid_argument on malformed input.
Schedule schedule_from_json_text(std::string_view text);

}  // namespace mpfjss

#endif  // MPFJSS_SCHEDULE_HPP_
