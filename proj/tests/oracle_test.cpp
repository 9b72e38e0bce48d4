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
#include "mpfjss/oracle.hpp"
#include "mpfjss/validator.hpp"
#include "support/test_support.hpp"

namespace mpfjss {
namespace {

using testing::random_tiny_instance;

TEST(Oracle, ExampleOptimumIsOne) {
  const Instance inst = testing::example_instance();
  const OracleResult r = brute_force_optimal(inst);
  EXPECT_EQ(r.optimum, 1);
  EXPECT_TRUE(check_schedule(inst, r.witness).empty());
  EXPECT_EQ(total_tardiness(inst, r.witness), 1);
}

TEST(Oracle, ChainEndingAtDeadline) {
  Instance inst;
  inst.operations = {{"a", 2}, {"b", 3}};
  inst.demands = {{"a", {"w"}}, {"b", {"w"}}};
  inst.resources = {{"w", 1, {"a", "b"}}};
  inst.jobs = {{"j", {"a", "b"}, {{"a", "b"}}, 5}};
  EXPECT_EQ(brute_force_optimal(inst).optimum, 0);
}

TEST(Oracle, UnaryResourcePigeonhole) {
  Instance inst;
  inst.operations = {{"a", 1}};
  inst.demands = {{"a", {"w"}}};
  inst.resources = {{"w", 1, {"a"}}};
  inst.jobs = {{"j1", {"a"}, {}, 1}, {"j2", {"a"}, {}, 1}};
  EXPECT_EQ(brute_force_optimal(inst).optimum, 1);
}

TEST(Oracle, RefusesOversizedInstances) {
  const Instance inst = testing::example_instance();
  OracleBudget b;
  b.max_jobs = 2;
  EXPECT_THROW(brute_force_optimal(inst, b), OracleBudgetExceeded);
  b = {};
  b.max_tasks = 8;
  EXPECT_THROW(brute_force_optimal(inst, b), OracleBudgetExceeded);
  b = {};
  b.horizon = 5;
  EXPECT_THROW(brute_force_optimal(inst, b), OracleBudgetExceeded);
  b = {};
  b.node_limit = 3;
  EXPECT_THROW(brute_force_optimal(inst, b), OracleBudgetExceeded);
}

TEST(Oracle, RejectsBrokenInstances) {
  Instance inst = testing::example_instance();
  inst.jobs[0].precedence.emplace_back("o2", "o1");
  EXPECT_THROW(brute_force_optimal(inst), std::invalid_argument);
  inst = testing::example_instance();
  for (auto& r : inst.resources) {
    if (r.resource_class == "m" && r.index == 1) r.capabilities.clear();
  }
  EXPECT_THROW(brute_force_optimal(inst), std::runtime_error);
}

// The start-order filter only removes duplicate sequences.
TEST(Oracle, CanonicalFilterKeepsOptimum) {
  OracleBudget all;
  all.canonical_order = false;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = random_tiny_instance(seed);
    const OracleResult a = brute_force_optimal(inst);
    const OracleResult b = brute_force_optimal(inst, all);
    EXPECT_EQ(a.optimum, b.optimum) << "seed " << seed;
    EXPECT_TRUE(check_schedule(inst, a.witness).empty()) << "seed " << seed;
  }
}

TEST(Oracle, AgreesWithOptimizer) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Instance inst = random_tiny_instance(seed);
    const OracleResult o = brute_force_optimal(inst);
    for (SearchEngine e : {SearchEngine::kLearning, SearchEngine::kDepthFirst}) {
      SearchLimits l;
      l.engine = e;
      const OptimizeResult r = optimize(inst, single_shot_bound(inst), l);
      ASSERT_TRUE(r.best);
      EXPECT_TRUE(r.proven_optimal);
      EXPECT_EQ(r.best->total_tardiness, o.optimum) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace mpfjss
