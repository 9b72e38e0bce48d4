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

#include "mpfjss/scheduler.hpp"
#include "mpfjss/validator.hpp"
#include "support/test_support.hpp"
#include "support/validator_fixture.hpp"

namespace mpfjss {
namespace {

using testing::find;
using testing::fixture;
using testing::fixture_schedule;
using testing::mutations;

TEST(Validator, FixtureIsClean) {
  EXPECT_TRUE(check_schedule(fixture(), fixture_schedule()).empty());
}

TEST(Validator, EachMutationYieldsExactlyItsKind) {
  for (const auto& m : mutations()) {
    Schedule s = fixture_schedule();
    m.apply(s);
    const auto vs = check_schedule(fixture(), s);
    ASSERT_FALSE(vs.empty()) << m.name;
    for (const auto& v : vs) {
      EXPECT_EQ(v.kind, m.kind) << m.name << ": " << to_string(v.kind) << " "
                                << v.detail;
    }
  }
}

TEST(Validator, NegativeStart) {
  Schedule s = fixture_schedule();
  auto& c = find(s, "j2", "c");
  c.start = -1;
  c.end = 0;
  const auto vs = check_schedule(fixture(), s);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::kPreemptionOrNegativeTime);
}

TEST(Validator, BackToBackIsLegal) {
  Schedule s = fixture_schedule();
  auto& c = find(s, "j2", "c");
  c.resources = {{"w", 1}};
  c.start = 3;
  c.end = 4;
  EXPECT_TRUE(check_schedule(fixture(), s).empty());
}

TEST(Validator, StructuralProblems) {
  {
    Schedule s = fixture_schedule();
    s.assignments.pop_back();
    const auto vs = check_schedule(fixture(), s);
    ASSERT_FALSE(vs.empty());
    EXPECT_EQ(vs[0].kind, ViolationKind::kStructural);
  }
  {
    Schedule s = fixture_schedule();
    s.assignments.push_back({"j9", "c", 0, 1, {{"w", 2}}});
    const auto vs = check_schedule(fixture(), s);
    ASSERT_FALSE(vs.empty());
    EXPECT_EQ(vs[0].kind, ViolationKind::kStructural);
  }
  {
    Schedule s = fixture_schedule();
    find(s, "j2", "c").resources = {{"w", 7}};
    const auto vs = check_schedule(fixture(), s);
    ASSERT_FALSE(vs.empty());
    EXPECT_EQ(vs[0].kind, ViolationKind::kStructural);
  }
}

TEST(Validator, IncapableResourceIsDemandUnmet) {
  Instance inst = fixture();
  inst.resources[1].capabilities = {"a", "b"};  // w2 cannot run c
  const auto vs = check_schedule(inst, fixture_schedule());
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::kDemandUnmet);
}

TEST(Validator, SolverOutputOnExample) {
  const Instance inst = testing::example_instance();
  const auto r = optimize(inst, 1);
  ASSERT_TRUE(r.best);
  EXPECT_TRUE(check_schedule(inst, *r.best).empty());
  EXPECT_EQ(total_tardiness(inst, *r.best), 1);

  // Move some task onto a resource already busy at that time.
  Schedule s = *r.best;
  bool mutated = false;
  for (std::size_t i = 0; i < s.assignments.size() && !mutated; ++i) {
    for (std::size_t j = 0; j < s.assignments.size() && !mutated; ++j) {
      auto& x = s.assignments[i];
      const auto& y = s.assignments[j];
      if (i == j || x.job == y.job || x.op != y.op) continue;
      if (x.resources == y.resources) continue;
      x.start = y.start;
      x.end = y.end;
      x.resources = y.resources;
      mutated = true;
    }
  }
  ASSERT_TRUE(mutated);
  bool overlap = false;
  for (const auto& v : check_schedule(inst, s)) {
    overlap = overlap || v.kind == ViolationKind::kResourceOverlap;
  }
  EXPECT_TRUE(overlap);
}

TEST(Validator, TotalTardinessFormula) {
  const Instance inst = fixture();
  Schedule s = fixture_schedule();
  EXPECT_EQ(total_tardiness(inst, s), 0);
  // j1 finishing exactly at its deadline is on time.
  auto& b = find(s, "j1", "b");
  b.start = 7;
  b.end = 8;  // deadline 3, five late
  EXPECT_EQ(total_tardiness(inst, s), 5);
}

TEST(Validator, KindNamesAndJson) {
  EXPECT_STREQ(to_string(ViolationKind::kDemandUnmet), "demand-unmet");
  EXPECT_STREQ(to_string(ViolationKind::kPreemptionOrNegativeTime),
               "preemption-or-negative-time");
  EXPECT_STREQ(to_string(ViolationKind::kSameJobOverlap), "same-job-overlap");
  EXPECT_STREQ(to_string(ViolationKind::kResourceOverlap), "resource-overlap");
  EXPECT_STREQ(to_string(ViolationKind::kPrecedenceOrder), "precedence-order");
  EXPECT_STREQ(to_string(ViolationKind::kTardinessMiscomputed),
               "tardiness-miscomputed");
  Schedule s = fixture_schedule();
  s.total_tardiness = 4;
  const std::string json = to_json_text(check_schedule(fixture(), s));
  EXPECT_NE(json.find("tardiness-miscomputed"), std::string::npos);
  EXPECT_EQ(to_json_text(std::vector<Violation>{}, 0), "[]");
}

}  // namespace
}  // namespace mpfjss
