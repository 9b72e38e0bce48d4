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


#include <gtest/gtest.h>

#include "mpfjss/bound_search.hpp"
#include "mpfjss/instance_gen.hpp"
#include "mpfjss/validator.hpp"
#include "support/test_support.hpp"

namespace mpfjss {
namespace {

using testing::random_tiny_instance;
using testing::TinyShape;

constexpr TinyShape kSmall{4, 4, 4, 5, 2};
// Proving optima at every cap with three searches is costly; keep it small.
constexpr TinyShape kOptShape{3, 4, 4, 5, 2};

SearchLimits with(SearchEngine e, bool symmetry = true) {
  SearchLimits l;
  l.engine = e;
  l.symmetry_breaking = symmetry;
  return l;
}

void expect_clean(const Instance& inst, const Schedule& s, Minutes cap,
                  const std::string& where) {
  const auto vs = check_schedule(inst, s);
  EXPECT_TRUE(vs.empty()) << where << ": " << to_json_text(vs);
  for (const auto& [job, late] : s.tardiness) {
    EXPECT_LE(late, cap) << where << " job " << job;
  }
}

// Verdicts per cap: antitone in the cap, engine and symmetry independent,
// SAT witnesses valid.
TEST(SchedulerProperty, DecideAcrossCaps) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = random_tiny_instance(seed, kSmall);
    const Minutes top = single_shot_bound(inst);
    bool seen_sat = false;
    for (Minutes cap = 0; cap <= top; ++cap) {
      const std::string where =
          "seed " + std::to_string(seed) + " cap " + std::to_string(cap);
      const auto a = decide(inst, cap, with(SearchEngine::kLearning));
      const auto b = decide(inst, cap, with(SearchEngine::kDepthFirst));
      const auto c = decide(inst, cap, with(SearchEngine::kLearning, false));
      ASSERT_NE(a.verdict, Verdict::kUnknown) << where;
      EXPECT_EQ(a.verdict, b.verdict) << where;
      EXPECT_EQ(a.verdict, c.verdict) << where;
      if (seen_sat) EXPECT_EQ(a.verdict, Verdict::kSat) << where;
      seen_sat = seen_sat || a.verdict == Verdict::kSat;
      for (const auto* r : {&a, &b, &c}) {
        if (r->schedule) expect_clean(inst, *r->schedule, cap, where);
      }
    }
    EXPECT_TRUE(seen_sat) << "seed " << seed;  // the sum of durations suffices
  }
}

// Optimum under a cap: non-increasing in the cap, identical across engines
// and with symmetry breaking off.
TEST(SchedulerProperty, OptimumAcrossCaps) {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const Instance inst = random_tiny_instance(seed, kOptShape);
    const Minutes top = single_shot_bound(inst);
    std::optional<Minutes> previous;
    for (Minutes cap = 0; cap <= top; ++cap) {
      const std::string where =
          "seed " + std::to_string(seed) + " cap " + std::to_string(cap);
      const auto a = optimize(inst, cap, with(SearchEngine::kLearning));
      if (!a.best) {
        EXPECT_FALSE(previous) << where;
        continue;
      }
      ASSERT_TRUE(a.proven_optimal) << where;
      expect_clean(inst, *a.best, cap, where);
      const auto b = optimize(inst, cap, with(SearchEngine::kDepthFirst));
      const auto c = optimize(inst, cap, with(SearchEngine::kLearning, false));
      ASSERT_TRUE(b.best && c.best) << where;
      EXPECT_EQ(a.best->total_tardiness, b.best->total_tardiness) << where;
      EXPECT_EQ(a.best->total_tardiness, c.best->total_tardiness) << where;
      if (previous) EXPECT_LE(a.best->total_tardiness, *previous) << where;
      previous = a.best->total_tardiness;
    }
  }
}

// Generated shapes with many interchangeable resources and partial orders.
TEST(SchedulerProperty, GeneratedInstancesSolveAtSingleShotBound) {
  GenParams g;
  g.op_types = 8;
  g.machines = 4;
  g.workers = 4;
  g.min_jobs = 3;
  g.max_jobs = 6;
  g.min_ops_per_job = 1;
  g.max_ops_per_job = 4;
  g.min_duration = 1;
  g.max_duration = 9;
  g.shift = 20;
  g.worker_skill = 0.5;
  g.partial_order = 0.5;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = generate(g, seed);
    const Minutes top = single_shot_bound(inst);
    const auto r = decide(inst, top);
    ASSERT_EQ(r.verdict, Verdict::kSat) << seed;
    expect_clean(inst, *r.schedule, top, "seed " + std::to_string(seed));

    const BoundSearch exp = exponential_bound(inst);
    ASSERT_TRUE(exp.result.cap);
    const Minutes cap = *exp.result.cap;
    EXPECT_EQ(decide(inst, cap).verdict, Verdict::kSat);
    if (cap > 0) EXPECT_EQ(decide(inst, cap - 1).verdict, Verdict::kUnsat);
    const BoundSearch inc = incremental_bound(inst, 5);
    ASSERT_TRUE(inc.result.cap);
    EXPECT_GE(*inc.result.cap, cap);
    EXPECT_LT(*inc.result.cap - cap, 5);
  }
}

TEST(SchedulerProperty, RepeatRunsAreIdentical) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = random_tiny_instance(seed, kSmall);
    const Minutes top = single_shot_bound(inst);
    EXPECT_EQ(optimize(inst, top).best, optimize(inst, top).best);
    EXPECT_EQ(decide(inst, top).schedule, decide(inst, top).schedule);
  }
}

}  // namespace
}  // namespace mpfjss
