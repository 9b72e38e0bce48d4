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

// Strategies that pick the uniform per-job tardiness cap handed to the
// optimizer.
//
//   single  the sum of all task durations; always satisfiable, never probed
//   inc     tumbling window: probe 0, w, 2w, ... and stop at the first SAT
//   exp     probe 0, then 1, 2, 4, ... until SAT, then binary search down to
//           the smallest satisfiable cap
//
// A cap B means every job finishes no later than its deadline plus B.

#ifndef MPFJSS_BOUND_SEARCH_HPP_
#define MPFJSS_BOUND_SEARCH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpfjss/instance.hpp"
#include "mpfjss/scheduler.hpp"

namespace mpfjss {

enum class Strategy { kSingle, kIncremental, kExponential };

const char* to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct StrategyConfig {
  Strategy strategy = Strategy::kExponential;
  Minutes window = 20;
  double timeout_seconds = 7200.0;
  // The search itself is deterministic; the seed is carried into reports.
  std::uint64_t seed = 0;
  bool symmetry_breaking = true;
};

struct Probe {
  Minutes bound = 0;
  Verdict verdict = Verdict::kUnknown;
  double seconds = 0.0;
};

struct BoundResult {
  Strategy strategy = Strategy::kExponential;
  // Smallest cap found SAT by the strategy; nullopt if none was found.
  std::optional<Minutes> cap;
  // Lower edge of the final tumbling window (inc only); reported, not
  // enforced.
  Minutes window_low = 0;
  // False when the probe sequence stopped early (budget), so `cap` may not
  // be what the strategy would have returned.
  bool complete = false;
  std::vector<Probe> probes;
  double search_seconds = 0.0;
};

// Answers one "is there a schedule under cap B" question.
using ProbeFn = std::function<Verdict(Minutes)>;

// Generic drivers. `ceiling` is a cap known to be satisfiable; probes never
// exceed it (exp) or stop at the first window edge >= it (inc).
BoundResult incremental_bound(const ProbeFn& probe, Minutes window,
                              Minutes ceiling);
BoundResult exponential_bound(const ProbeFn& probe, Minutes ceiling);

// Sum of durations over all (job, op) tasks.
Minutes single_shot_bound(const Instance& inst);

struct BoundSearch {
  BoundResult result;
  // Schedule from the SAT probe at `result.cap`.
  std::optional<Schedule> witness;
};

BoundSearch incremental_bound(const Instance& inst, Minutes window,
                              const SearchLimits& limits = {});
BoundSearch exponential_bound(const Instance& inst,
                              const SearchLimits& limits = {});

enum class SolveStatus { kOptimal, kIncumbent, kBoundNotFound, kTimeout };

const char* to_string(SolveStatus s);

struct SolveReport {
  StrategyConfig config;
  BoundResult bound;
  SolveStatus status = SolveStatus::kTimeout;
  std::optional<Schedule> schedule;
  bool proven_optimal = false;
  double search_seconds = 0.0;
  double opt_seconds = 0.0;
};

// Bound phase, then optimization under the found cap seeded with the bound
// phase's witness. Both phases share one wall-clock budget.
SolveReport solve_with_strategy(const Instance& inst,
                                const StrategyConfig& config);

// `strategy`, `cap`, `probes`, `search_seconds`, `opt_seconds`,
// `total_tardiness`, `proven_optimal`, `verdict` and the embedded `schedule`.
std::string to_json_text(const SolveReport& report, int indent = 2);

}  // namespace mpfjss

#endif  // MPFJSS_BOUND_SEARCH_HPP_
