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

#include <algorithm>
#include <map>
#include <set>

#include "mpfjss/instance_gen.hpp"
#include "mpfjss/instance_io.hpp"

namespace mpfjss {
namespace {

int count_class(const Instance& inst, const std::string& cls) {
  return static_cast<int>(std::count_if(
      inst.resources.begin(), inst.resources.end(),
      [&](const auto& r) { return r.resource_class == cls; }));
}

bool capable(const Instance& inst, const std::string& cls,
             const std::string& op) {
  return std::any_of(inst.resources.begin(), inst.resources.end(),
                     [&](const auto& r) {
                       return r.resource_class == cls &&
                              std::count(r.capabilities.begin(),
                                         r.capabilities.end(), op) > 0;
                     });
}

// Transitive closure of a job's precedence, by op name.
std::set<std::pair<std::string, std::string>> closure(const JobSpec& job) {
  std::set<std::pair<std::string, std::string>> c(job.precedence.begin(),
                                                  job.precedence.end());
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : std::vector(c.begin(), c.end())) {
      for (const auto& [x, y] : std::vector(c.begin(), c.end())) {
        if (b == x && c.insert({a, y}).second) grew = true;
      }
    }
  }
  return c;
}

TEST(Generate, DefaultShape) {
  const Instance inst = generate(GenParams{}, 42);
  EXPECT_EQ(inst.operations.size(), 50u);
  EXPECT_EQ(count_class(inst, "m"), 75);
  EXPECT_EQ(count_class(inst, "w"), 45);
  EXPECT_GE(inst.jobs.size(), 30u);
  EXPECT_LE(inst.jobs.size(), 50u);
  EXPECT_TRUE(validate_instance(inst).empty());
}

TEST(Generate, CoverageAndStrictOrder) {
  const GenParams g;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = generate(g, seed);
    ASSERT_TRUE(validate_instance(inst).empty()) << seed;
    for (const auto& op : inst.operations) {
      EXPECT_TRUE(capable(inst, "w", op.id));
      const Demand* d = inst.find_demand(op.id);
      if (std::count(d->classes.begin(), d->classes.end(), "m")) {
        EXPECT_TRUE(capable(inst, "m", op.id));
      }
      EXPECT_GE(op.duration, g.min_duration);
      EXPECT_LE(op.duration, g.max_duration);
    }
    for (const auto& job : inst.jobs) {
      const std::size_t k = job.ops.size();
      EXPECT_GE(k, static_cast<std::size_t>(g.min_ops_per_job));
      EXPECT_LE(k, static_cast<std::size_t>(g.max_ops_per_job));
      EXPECT_EQ(closure(job).size(), k * (k - 1) / 2);  // total order
      EXPECT_GE(job.deadline, 0);
      EXPECT_LE(job.deadline, 2 * g.shift);
    }
  }
}

TEST(Generate, PureFunctionOfParamsAndSeed) {
  GenParams g;
  g.partial_order = 0.3;
  EXPECT_EQ(generate(g, 7), generate(g, 7));
  EXPECT_EQ(to_facts(generate(g, 7)), to_facts(generate(g, 7)));
  EXPECT_NE(generate(g, 7), generate(g, 8));
}

TEST(Generate, PartialOrdersAreAcyclicSubsets) {
  GenParams strict;
  GenParams loose;
  loose.partial_order = 0.5;
  int dropped = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance a = generate(strict, seed);
    const Instance b = generate(loose, seed);
    ASSERT_TRUE(validate_instance(b).empty());
    for (const auto& job : b.jobs) {
      for (const auto& [x, y] : closure(job)) EXPECT_NE(x, y);
      for (const auto& [x, y] : job.precedence) {
        const auto ix = std::find(job.ops.begin(), job.ops.end(), x);
        const auto iy = std::find(job.ops.begin(), job.ops.end(), y);
        EXPECT_LT(ix, iy);  // always along the processing order
      }
      const std::size_t k = job.ops.size();
      dropped += static_cast<int>(k * (k - 1) / 2 - job.precedence.size());
    }
    (void)a;
  }
  EXPECT_GT(dropped, 0);
}

TEST(Generate, MinimalInstance) {
  GenParams g;
  g.op_types = 1;
  g.machines = 0;
  g.machine_share = 0.0;
  g.workers = 1;
  g.min_jobs = g.max_jobs = 1;
  g.min_ops_per_job = g.max_ops_per_job = 1;
  const Instance inst = generate(g, 1);
  EXPECT_EQ(inst.jobs.size(), 1u);
  EXPECT_EQ(inst.jobs[0].ops.size(), 1u);
  EXPECT_EQ(inst.resources.size(), 1u);
  EXPECT_TRUE(validate_instance(inst).empty());
}

TEST(Generate, TightShareControlsDeadlines) {
  GenParams g;
  g.tight_share = 1.0;
  const Instance tight = generate(g, 3);
  std::map<std::string, Minutes> dur;
  for (const auto& op : tight.operations) dur[op.id] = op.duration;
  for (const auto& job : tight.jobs) {
    Minutes serial = 0;
    for (const auto& op : job.ops) serial += dur[op];
    EXPECT_LT(job.deadline, serial);
  }
}

TEST(Generate, RejectsBadParams) {
  auto bad = [](auto edit) {
    GenParams g;
    edit(g);
    return g;
  };
  EXPECT_THROW(check_params(bad([](GenParams& g) { g.workers = 0; })),
               std::invalid_argument);
  EXPECT_THROW(check_params(bad([](GenParams& g) { g.max_jobs = 1; })),
               std::invalid_argument);
  EXPECT_THROW(check_params(bad([](GenParams& g) { g.max_ops_per_job = 51; })),
               std::invalid_argument);
  EXPECT_THROW(check_params(bad([](GenParams& g) { g.min_duration = 0; })),
               std::invalid_argument);
  EXPECT_THROW(check_params(bad([](GenParams& g) { g.partial_order = 1.5; })),
               std::invalid_argument);
  EXPECT_THROW(check_params(bad([](GenParams& g) { g.machines = 0; })),
               std::invalid_argument);
  EXPECT_THROW(generate(bad([](GenParams& g) { g.shift = 0; }), 1),
               std::invalid_argument);
  EXPECT_NO_THROW(check_params(GenParams{}));
}

TEST(SplitDay, SizesAndContents) {
  GenParams g;
  g.min_jobs = g.max_jobs = 32;
  const Instance day = generate(g, 11);
  const auto parts = split_day(day);
  std::vector<std::size_t> sizes;
  for (const auto& p : parts) sizes.push_back(p.jobs.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{5, 10, 15, 20, 25, 30, 32}));
  for (const auto& p : parts) {
    EXPECT_TRUE(validate_instance(p).empty());
    EXPECT_EQ(p.resources, day.resources);
    EXPECT_EQ(p.operations, day.operations);
    EXPECT_TRUE(std::equal(p.jobs.begin(), p.jobs.end(), day.jobs.begin()));
  }
  EXPECT_EQ(parts.back(), day);
}

TEST(SplitDay, SmallDays) {
  GenParams g;
  g.min_jobs = g.max_jobs = 5;
  EXPECT_EQ(split_day(generate(g, 1)).size(), 1u);
  g.min_jobs = g.max_jobs = 0;
  EXPECT_TRUE(split_day(generate(g, 1)).empty());
  EXPECT_THROW(split_day(generate(g, 1), 0), std::invalid_argument);
}

}  // namespace
}  // namespace mpfjss
