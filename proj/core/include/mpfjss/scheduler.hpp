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

// Complete schedule search.
//
// Decisions are resource allocations (one instance per demanded class per
// task) and ordering booleans for conflict pairs: two operations of one job
// that precedence leaves unordered, or operations of different jobs sharing an
// allocated instance. Start times are never branched on; they are the minimal
// solution of the difference-logic system
//
//   s_t >= 0
//   s_b >= s_a + p_a              for precedence and ordered conflict pairs
//   s_t + p_t <= d_job(t) + cap   the uniform per-job tardiness cap
//
// maintained by dl::Engine, which also supplies the time windows used for
// propagation.

#ifndef MPFJSS_SCHEDULER_HPP_
#define MPFJSS_SCHEDULER_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpfjss/instance.hpp"
#include "mpfjss/schedule.hpp"

namespace mpfjss {

using Clock = std::chrono::steady_clock;

// A demanded class has no instance able to run some job's operation.
class UnsolvableInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (job, op, demanded class) -> chosen instance index within the class.
struct SlotKey {
  std::string job;
  std::string op;
  std::string resource_class;

  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
  friend bool operator==(const SlotKey&, const SlotKey&) = default;
};
using Allocation = std::map<SlotKey, int>;

// Unordered pair of tasks, stored with first < second in task order.
struct TaskPair {
  TaskRef first;
  TaskRef second;

  friend auto operator<=>(const TaskPair&, const TaskPair&) = default;
  friend bool operator==(const TaskPair&, const TaskPair&) = default;
};

struct DirectedPair {
  TaskRef before;
  TaskRef after;
};

// Pairs that need an ordering decision under `alloc`: same-job pairs not
// related by the transitive precedence, and cross-job pairs sharing at least
// one allocated instance. Throws std::invalid_argument for a partial
// allocation.
std::set<TaskPair> conflict_pairs(const Instance& inst,
                                  const Allocation& alloc);

// Allocation used by a schedule.
Allocation allocation_of(const Schedule& sched);

// Left-shifted start times for a fully ordered allocation, or nullopt when
// the orderings and precedences form a cycle. Every conflict pair must be
// directed.
std::optional<Schedule> start_times_from_order(
    const Instance& inst, const Allocation& alloc,
    const std::vector<DirectedPair>& order);

enum class Verdict { kSat, kUnsat, kUnknown };

const char* to_string(Verdict v);

enum class SearchEngine {
  // Clause learning over allocation and ordering literals with backjumping.
  kLearning,
  // Plain depth-first branch and bound with window and energy propagation.
  kDepthFirst,
};

struct SearchLimits {
  std::optional<Clock::time_point> deadline;
  std::uint64_t node_limit = 0;  // 0: unlimited
  // Restrict choices among interchangeable instances (same class, same
  // capabilities) to the used ones plus the lowest-indexed unused one.
  bool symmetry_breaking = true;
  SearchEngine engine = SearchEngine::kLearning;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t failures = 0;
  std::uint64_t solutions = 0;
};

struct DecideResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Schedule> schedule;  // set iff kSat
  SearchStats stats;
};

// Looks for a schedule with every job's tardiness <= cap. kUnsat is a proof
// by exhaustion; kUnknown means a limit was hit. Throws UnsolvableInstance
// when no allocation exists at all, std::invalid_argument for a structurally
// invalid instance.
DecideResult decide(const Instance& inst, Minutes cap,
                    const SearchLimits& limits = {});

struct OptimizeResult {
  std::optional<Schedule> best;
  bool proven_optimal = false;
  SearchStats stats;
};

// Branch and bound on total tardiness over schedules with per-job tardiness
// <= cap. `incumbent`, when given, must satisfy the cap; it seeds the bound
// and is returned if nothing better exists.
OptimizeResult optimize(const Instance& inst, Minutes cap,
                        const SearchLimits& limits = {},
                        const Schedule* incumbent = nullptr);

}  // namespace mpfjss

#endif  // MPFJSS_SCHEDULER_HPP_
