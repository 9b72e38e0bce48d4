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

#include "mpfjss/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace mpfjss {

namespace {

std::string padded(char prefix, int value, int count) {
  const int width = static_cast<int>(std::to_string(count).size());
  std::string digits = std::to_string(value);
  return std::string(1, prefix) +
         std::string(width - static_cast<int>(digits.size()), '0') + digits;
}

// std::uniform_*_distribution output is implementation defined; these keep
// instances identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

void check_params(const GenParams& g) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (g.op_types < 1) fail("op_types must be >= 1");
  if (g.workers < 1) fail("workers must be >= 1");
  if (g.machines < 0) fail("machines must be >= 0");
  if (g.min_jobs < 0 || g.max_jobs < g.min_jobs) fail("bad job range");
  if (g.min_ops_per_job < 1 || g.max_ops_per_job < g.min_ops_per_job) {
    fail("bad ops-per-job range");
  }
  if (g.max_ops_per_job > g.op_types) fail("jobs cannot repeat op types");
  if (g.min_duration < 1 || g.max_duration < g.min_duration) {
    fail("bad duration range");
  }
  if (g.shift < 1) fail("shift must be >= 1");
  auto prob = [&](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) fail(what);
  };
  prob(g.machine_share, "machine_share must be in [0, 1]");
  prob(g.worker_skill, "worker_skill must be in [0, 1]");
  prob(g.tight_share, "tight_share must be in [0, 1]");
  prob(g.partial_order, "partial_order must be in [0, 1]");
  if (!(g.max_deadline_shifts > 0.0)) fail("max_deadline_shifts must be > 0");
  if (g.machine_share > 0.0 && g.machines == 0) {
    fail("machine operations need at least one machine");
  }
}

Instance generate(const GenParams& g, std::uint64_t seed) {
  check_params(g);
  Rng rng(seed);
  Instance inst;

  std::vector<std::string> ops;
  for (int i = 1; i <= g.op_types; ++i) {
    ops.push_back(padded('o', i, g.op_types));
    inst.operations.push_back(
        {ops.back(), rng.uniform(g.min_duration, g.max_duration)});
  }

  std::vector<int> machine_ops;
  for (int i = 0; i < g.op_types; ++i) {
    Demand d{ops[i], {"w"}};
    if (g.machines > 0 && rng.chance(g.machine_share)) {
      d.classes.push_back("m");
      machine_ops.push_back(i);
    }
    inst.demands.push_back(std::move(d));
  }

  // Workers: independent skills, then every op type gets one more trained
  // worker if it has none.
  std::vector<std::set<int>> skills(g.workers);
  for (auto& s : skills) {
    for (int i = 0; i < g.op_types; ++i) {
      if (rng.chance(g.worker_skill)) s.insert(i);
    }
  }
  for (int i = 0; i < g.op_types; ++i) {
    const bool covered = std::any_of(skills.begin(), skills.end(),
                                     [&](const auto& s) { return s.count(i); });
    if (!covered) skills[rng.uniform(0, g.workers - 1)].insert(i);
  }

  // Machines: dealt round-robin over machine op types so each has one, the
  // rest to random machine op types; a few run a second type.
  std::vector<std::set<int>> tooling(g.machines);
  if (!machine_ops.empty()) {
    for (int m = 0; m < g.machines; ++m) {
      const int k = static_cast<int>(machine_ops.size());
      tooling[m].insert(m < k ? machine_ops[m]
                              : machine_ops[rng.uniform(0, k - 1)]);
      if (rng.chance(0.2)) tooling[m].insert(machine_ops[rng.uniform(0, k - 1)]);
    }
    if (static_cast<int>(machine_ops.size()) > g.machines) {
      for (std::size_t i = g.machines; i < machine_ops.size(); ++i) {
        tooling[rng.uniform(0, g.machines - 1)].insert(machine_ops[i]);
      }
    }
  }

  auto add_resources = [&](const char* cls,
                           const std::vector<std::set<int>>& caps) {
    for (std::size_t r = 0; r < caps.size(); ++r) {
      ResourceInstance res{cls, static_cast<int>(r) + 1, {}};
      for (int i : caps[r]) res.capabilities.push_back(ops[i]);
      inst.resources.push_back(std::move(res));
    }
  };
  add_resources("w", skills);
  add_resources("m", tooling);

  const int jobs = static_cast<int>(rng.uniform(g.min_jobs, g.max_jobs));
  const Minutes max_deadline = static_cast<Minutes>(
      std::floor(g.max_deadline_shifts * static_cast<double>(g.shift)));
  for (int j = 1; j <= jobs; ++j) {
    JobSpec job;
    job.id = padded('j', j, g.max_jobs);
    const int k = static_cast<int>(
        rng.uniform(g.min_ops_per_job, g.max_ops_per_job));
    // Distinct op types in processing order (partial Fisher-Yates).
    std::vector<int> pool(g.op_types);
    for (int i = 0; i < g.op_types; ++i) pool[i] = i;
    Minutes serial = 0;
    for (int i = 0; i < k; ++i) {
      std::swap(pool[i], pool[rng.uniform(i, g.op_types - 1)]);
      job.ops.push_back(ops[pool[i]]);
      serial += inst.operations[pool[i]].duration;
    }
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (g.partial_order > 0.0 && rng.chance(g.partial_order)) continue;
        job.precedence.emplace_back(job.ops[a], job.ops[b]);
      }
    }
    Minutes deadline;
    if (rng.chance(g.tight_share)) {
      deadline = static_cast<Minutes>(
          std::floor(static_cast<double>(serial) * (0.5 + 0.5 * rng.unit())));
    } else {
      deadline = serial + rng.uniform(0, g.shift);
    }
    job.deadline = std::clamp<Minutes>(deadline, 0, max_deadline);
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

std::vector<Instance> split_day(const Instance& day, int step) {
  if (step < 1) throw std::invalid_argument("step must be >= 1");
  std::vector<Instance> out;
  const int n = static_cast<int>(day.jobs.size());
  for (int k = step; k < n + step; k += step) {
    Instance sub = day;
    sub.jobs.resize(std::min(k, n));
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace mpfjss
