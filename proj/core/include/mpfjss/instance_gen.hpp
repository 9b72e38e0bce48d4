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

// Seeded generator for factory-day instances: a shared pool of operation
// types, workers and machines, and a day's worth of jobs drawn from it.

#ifndef MPFJSS_INSTANCE_GEN_HPP_
#define MPFJSS_INSTANCE_GEN_HPP_

#include <cstdint>
#include <vector>

#include "mpfjss/instance.hpp"

namespace mpfjss {

struct GenParams {
  int op_types = 50;
  int machines = 75;
  int workers = 45;
  int min_jobs = 30;
  int max_jobs = 50;
  int min_ops_per_job = 3;
  int max_ops_per_job = 6;
  Minutes min_duration = 10;
  Minutes max_duration = 90;
  Minutes shift = 480;
  // Share of operation types that also need a machine.
  double machine_share = 0.6;
  // Chance that a worker is trained on a given operation type.
  double worker_skill = 0.15;
  // Share of jobs whose deadline is below their serial processing time.
  double tight_share = 0.3;
  // Deadlines never exceed this many shifts.
  double max_deadline_shifts = 2.0;
  // 0 gives each job a strict total order; p drops each ordered pair with
  // probability p, leaving a partial order.
  double partial_order = 0.0;
};

// Throws std::invalid_argument for inconsistent parameters.
void check_params(const GenParams& params);

// Same params and seed give the same instance.
Instance generate(const GenParams& params, std::uint64_t seed);

// Sub-instances over the first step, 2*step, ... jobs of `day`, ending with
// the full day. Shares resources and operations with `day`.
std::vector<Instance> split_day(const Instance& day, int step = 5);

}  // namespace mpfjss

#endif  // MPFJSS_INSTANCE_GEN_HPP_
