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

// Exhaustive reference solver for tiny instances. Shares no code with the
// difference-logic search: it enumerates task sequences and allocations and
// starts each task as early as its job and its instances allow.

#ifndef MPFJSS_ORACLE_HPP_
#define MPFJSS_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>

#include "mpfjss/instance.hpp"
#include "mpfjss/schedule.hpp"

namespace mpfjss {

struct OracleBudget {
  int max_jobs = 4;
  int max_tasks = 10;
  // Instances whose deadlines plus summed durations exceed this are refused.
  Minutes horizon = 10000;
  std::uint64_t node_limit = 50'000'000;
  // Only enumerate sequences whose computed starts are nondecreasing (ties
  // by task order). Complete: repeatedly re-sequencing an optimal schedule
  // by start time and left-shifting reaches a fixpoint the filter admits.
  bool canonical_order = true;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Minutes optimum = 0;
  Schedule witness;
  std::uint64_t nodes = 0;
};

// Minimum total tardiness. Throws OracleBudgetExceeded when the instance is
// over budget or the node limit is reached, std::invalid_argument for an
// invalid instance and std::runtime_error when some task has no capable
// instance.
OracleResult brute_force_optimal(const Instance& inst,
                                 const OracleBudget& budget = {});

}  // namespace mpfjss

#endif  // MPFJSS_ORACLE_HPP_
