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

// Schedule checker. Deliberately written against the instance data alone; it
// shares nothing with the solver's propagation.

#ifndef MPFJSS_VALIDATOR_HPP_
#define MPFJSS_VALIDATOR_HPP_

#include <string>
#include <vector>

#include "mpfjss/instance.hpp"
#include "mpfjss/schedule.hpp"

namespace mpfjss {

enum class ViolationKind {
  kDemandUnmet,               // resource set does not match the demand
  kPreemptionOrNegativeTime,  // end != start + duration, or start < 0
  kSameJobOverlap,
  kResourceOverlap,
  kPrecedenceOrder,           // (a, b) in P_j but start(b) < start(a)
  kTardinessMiscomputed,
  kStructural,                // unknown, duplicate or missing task/resource
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> entities;
  std::string detail;
};

// Empty iff the schedule is feasible and its reported tardiness is exact.
// Intervals are half-open: back-to-back tasks do not overlap.
std::vector<Violation> check_schedule(const Instance& inst,
                                      const Schedule& sched);

// Sum over jobs of max(0, C_j - d_j), C_j the latest finish of the job.
Minutes total_tardiness(const Instance& inst, const Schedule& sched);

std::string to_json_text(const std::vector<Violation>& violations,
                         int indent = 2);

}  // namespace mpfjss

#endif  // MPFJSS_VALIDATOR_HPP_
