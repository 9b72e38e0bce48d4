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

// Batch runs of one or more strategies over a directory of instances.

#ifndef MPFJSS_BENCH_HPP_
#define MPFJSS_BENCH_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mpfjss/bound_search.hpp"

namespace mpfjss {

struct BenchRecord {
  std::string instance;
  int jobs = 0;
  Strategy strategy = Strategy::kExponential;
  // optimal, incumbent, bound-not-found, timeout, or error when the instance
  // could not be loaded or solved at all (see `error`).
  std::string verdict;
  double search_s = 0.0;
  double opt_s = 0.0;
  std::optional<Minutes> total_tardiness;
  std::optional<Minutes> cap;
  std::string error;
};

struct BenchOptions {
  std::vector<Strategy> strategies{Strategy::kExponential};
  Minutes window = 20;
  double timeout_seconds = 7200.0;
  std::uint64_t seed = 0;
  int parallel = 1;
};

// Instance files (*.lp, *.json) directly under `dir`, sorted by name.
// Throws std::invalid_argument if `dir` is not a directory.
std::vector<std::filesystem::path> list_instances(
    const std::filesystem::path& dir);

BenchRecord bench_one(const std::filesystem::path& file, Strategy strategy,
                      const BenchOptions& options);

// One row per (instance, strategy), ordered by job count, then instance
// name, then strategy as listed in `options`.
std::vector<BenchRecord> run_bench(const std::vector<std::filesystem::path>& files,
                                   const BenchOptions& options);

// Header `instance,jobs,strategy,verdict,search_s,opt_s,total_tardiness,cap`;
// missing values are empty fields.
std::string to_csv(const std::vector<BenchRecord>& rows);
std::string to_json_text(const std::vector<BenchRecord>& rows, int indent = 2);

}  // namespace mpfjss

#endif  // MPFJSS_BENCH_HPP_
