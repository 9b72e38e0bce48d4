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

#ifndef MPFJSS_TESTS_SUPPORT_TEST_SUPPORT_HPP_
#define MPFJSS_TESTS_SUPPORT_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "mpfjss/instance.hpp"

namespace mpfjss::testing {

inline std::filesystem::path data_dir() { return MPFJSS_TEST_DATA_DIR; }

// Three jobs over five unit operations, three workers and four machines.
// Built by hand so that tests do not depend on the parser.
inline Instance example_instance() {
  Instance inst;
  for (const char* op : {"o1", "o2", "o3", "o4", "o5"}) {
    inst.operations.push_back({op, 1});
  }
  inst.demands = {{"o1", {"w"}},
                  {"o2", {"w"}},
                  {"o3", {"w", "m"}},
                  {"o4", {"w", "m"}},
                  {"o5", {"w", "m"}}};
  inst.resources = {{"w", 1, {"o1", "o2"}},       {"w", 2, {"o4", "o5"}},
                    {"w", 3, {"o2", "o3", "o4"}}, {"m", 1, {"o3"}},
                    {"m", 2, {"o4"}},             {"m", 3, {"o4"}},
                    {"m", 4, {"o5"}}};
  inst.jobs = {
      {"j1", {"o1", "o2", "o4"}, {{"o1", "o2"}, {"o1", "o4"}}, 3},
      {"j2", {"o3", "o4"}, {}, 3},
      {"j3", {"o1", "o2", "o3", "o5"}, {{"o3", "o2"}, {"o1", "o2"}, {"o1", "o5"}}, 3},
  };
  return inst;
}

// Seeded RNG with portable draws (std distributions differ across
// standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

struct TinyShape {
  int max_jobs = 3;
  int max_ops_per_job = 3;
  Minutes max_duration = 3;
  int op_types = 4;
  int max_instances = 2;  // per class
};

// Small random instance: up to `max_jobs` jobs, each a random partial order
// over distinct op types; workers and (for some ops) machines with random
// skills, every op covered.
inline Instance random_tiny_instance(std::uint64_t seed,
                                     const TinyShape& shape = {}) {
  Rng rng(seed);
  Instance inst;
  std::vector<std::string> ops;
  for (int i = 0; i < shape.op_types; ++i) {
    ops.push_back("o" + std::to_string(i + 1));
    inst.operations.push_back({ops.back(), rng.uniform(1, shape.max_duration)});
  }
  std::vector<bool> needs_machine(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    needs_machine[i] = rng.chance(0.4);
    Demand d{ops[i], {"w"}};
    if (needs_machine[i]) d.classes.push_back("m");
    inst.demands.push_back(d);
  }
  auto make_class = [&](const char* cls, const std::vector<int>& wanted) {
    if (wanted.empty()) return;
    const int count = static_cast<int>(rng.uniform(1, shape.max_instances));
    std::vector<ResourceInstance> made;
    for (int r = 1; r <= count; ++r) made.push_back({cls, r, {}});
    for (int i : wanted) {
      bool any = false;
      for (auto& r : made) {
        if (rng.chance(0.5)) {
          r.capabilities.push_back(ops[i]);
          any = true;
        }
      }
      if (!any) made[rng.uniform(0, count - 1)].capabilities.push_back(ops[i]);
    }
    for (auto& r : made) inst.resources.push_back(std::move(r));
  };
  std::vector<int> all(ops.size());
  std::vector<int> machine_ops;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    all[i] = static_cast<int>(i);
    if (needs_machine[i]) machine_ops.push_back(static_cast<int>(i));
  }
  make_class("w", all);
  make_class("m", machine_ops);

  const int jobs = static_cast<int>(rng.uniform(1, shape.max_jobs));
  for (int j = 1; j <= jobs; ++j) {
    JobSpec job;
    job.id = "j" + std::to_string(j);
    std::vector<int> pool = all;
    const int k = static_cast<int>(rng.uniform(
        1, std::min<int>(shape.max_ops_per_job, static_cast<int>(pool.size()))));
    Minutes work = 0;
    for (int i = 0; i < k; ++i) {
      std::swap(pool[i], pool[rng.uniform(i, static_cast<int>(pool.size()) - 1)]);
      job.ops.push_back(ops[pool[i]]);
      work += inst.operations[pool[i]].duration;
    }
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (rng.chance(0.4)) job.precedence.emplace_back(job.ops[a], job.ops[b]);
      }
    }
    job.deadline = rng.uniform(0, work + 1);
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

}  // namespace mpfjss::testing

#endif  // MPFJSS_TESTS_SUPPORT_TEST_SUPPORT_HPP_
