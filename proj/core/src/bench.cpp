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

#include "mpfjss/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "mpfjss/instance_io.hpp"

namespace mpfjss {

namespace fs = std::filesystem;

std::vector<fs::path> list_instances(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw std::invalid_argument(dir.string() + " is not a directory");
  }
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".lp" || ext == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BenchRecord bench_one(const fs::path& file, Strategy strategy,
                      const BenchOptions& options) {
  BenchRecord rec;
  rec.instance = file.filename().string();
  rec.strategy = strategy;
  try {
    const Instance inst = load_instance(file);
    rec.jobs = static_cast<int>(inst.jobs.size());
    StrategyConfig cfg;
    cfg.strategy = strategy;
    cfg.window = options.window;
    cfg.timeout_seconds = options.timeout_seconds;
    cfg.seed = options.seed;
    const SolveReport r = solve_with_strategy(inst, cfg);
    rec.verdict = to_string(r.status);
    rec.search_s = r.search_seconds;
    rec.opt_s = r.opt_seconds;
    rec.cap = r.bound.cap;
    if (r.schedule) rec.total_tardiness = r.schedule->total_tardiness;
  } catch (const std::exception& e) {
    rec.verdict = "error";
    rec.error = e.what();
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const std::vector<fs::path>& files,
                                   const BenchOptions& options) {
  struct Work {
    std::size_t file;
    std::size_t strategy;
  };
  std::vector<Work> work;
  for (std::size_t f = 0; f < files.size(); ++f) {
    for (std::size_t s = 0; s < options.strategies.size(); ++s) {
      work.push_back({f, s});
    }
  }
  std::vector<BenchRecord> rows(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      rows[i] = bench_one(files[work[i].file],
                          options.strategies[work[i].strategy], options);
    }
  };
  const int threads = std::max(1, options.parallel);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (rows[a].jobs != rows[b].jobs) {
                       return rows[a].jobs < rows[b].jobs;
                     }
                     if (rows[a].instance != rows[b].instance) {
                       return rows[a].instance < rows[b].instance;
                     }
                     return work[a].strategy < work[b].strategy;
                   });
  std::vector<BenchRecord> sorted;
  sorted.reserve(rows.size());
  for (std::size_t i : order) sorted.push_back(std::move(rows[i]));
  return sorted;
}

namespace {

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<BenchRecord>& rows) {
  std::ostringstream out;
  out << "instance,jobs,strategy,verdict,search_s,opt_s,total_tardiness,cap\n";
  for (const auto& r : rows) {
    out << csv_field(r.instance) << ',' << r.jobs << ',' << to_string(r.strategy)
        << ',' << r.verdict << ',' << seconds_text(r.search_s) << ','
        << seconds_text(r.opt_s) << ',';
    if (r.total_tardiness) out << *r.total_tardiness;
    out << ',';
    if (r.cap) out << *r.cap;
    out << '\n';
  }
  return out.str();
}

std::string to_json_text(const std::vector<BenchRecord>& rows, int indent) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["instance"] = r.instance;
    row["jobs"] = r.jobs;
    row["strategy"] = to_string(r.strategy);
    row["verdict"] = r.verdict;
    row["search_s"] = r.search_s;
    row["opt_s"] = r.opt_s;
    row["total_tardiness"] = r.total_tardiness
                                 ? nlohmann::ordered_json(*r.total_tardiness)
                                 : nlohmann::ordered_json(nullptr);
    row["cap"] = r.cap ? nlohmann::ordered_json(*r.cap)
                       : nlohmann::ordered_json(nullptr);
    if (!r.error.empty()) row["error"] = r.error;
    doc.push_back(std::move(row));
  }
  return doc.dump(indent);
}

}  // namespace mpfjss
