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

// mpfjss: solve, benchmark, generate and validate scheduling instances.
//
// Exit codes:
//   0  success (solve: a schedule was produced; validate: no violations)
//   1  validate found violations
//   2  usage error
//   3  input could not be read or parsed
//   4  instance has an operation no resource can run
//   5  solve produced no schedule (timeout or no bound found)

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpfjss/bench.hpp"
#include "mpfjss/bound_search.hpp"
#include "mpfjss/instance_gen.hpp"
#include "mpfjss/instance_io.hpp"
#include "mpfjss/validator.hpp"

namespace fs = std::filesystem;
using namespace mpfjss;

namespace {

enum Exit {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,
  kBadInput = 3,
  kUnsolvable = 4,
  kNoSchedule = 5,
};

constexpr const char* kExitCodes =
    "Exit codes: 0 ok, 1 violations found, 2 usage error, 3 unreadable or "
    "malformed input, 4 unsolvable instance, 5 no schedule within the "
    "timeout.";

// Writes to `path`, or stdout when empty.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::kIo, 0, 0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report_parse_error(const std::string& path, const ParseError& e) {
  std::cerr << path << ": error: " << e.what() << "\n";
  if (!e.fact().empty()) std::cerr << "  in: " << e.fact() << "\n";
}

struct SolveArgs {
  std::string instance;
  std::string strategy = "exp";
  Minutes window = 20;
  double timeout = 7200.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "json";
};

int run_solve(const SolveArgs& a) {
  Instance inst;
  try {
    inst = load_instance(a.instance);
  } catch (const ParseError& e) {
    report_parse_error(a.instance, e);
    return kBadInput;
  }
  StrategyConfig cfg;
  cfg.strategy = *parse_strategy(a.strategy);
  cfg.window = a.window;
  cfg.timeout_seconds = a.timeout;
  cfg.seed = a.seed;

  SolveReport report;
  try {
    report = solve_with_strategy(inst, cfg);
  } catch (const UnsolvableInstance& e) {
    std::cerr << a.instance << ": unsolvable: " << e.what() << "\n";
    return kUnsolvable;
  } catch (const std::invalid_argument& e) {
    std::cerr << a.instance << ": error: " << e.what() << "\n";
    return kBadInput;
  }

  std::string text;
  if (a.format == "csv") {
    BenchRecord rec;
    rec.instance = fs::path(a.instance).filename().string();
    rec.jobs = static_cast<int>(inst.jobs.size());
    rec.strategy = cfg.strategy;
    rec.verdict = to_string(report.status);
    rec.search_s = report.search_seconds;
    rec.opt_s = report.opt_seconds;
    rec.cap = report.bound.cap;
    if (report.schedule) rec.total_tardiness = report.schedule->total_tardiness;
    text = to_csv({rec});
  } else {
    text = to_json_text(report);
  }
  if (!emit(a.output, text)) return kBadInput;
  return report.schedule ? kOk : kNoSchedule;
}

struct BenchArgs {
  std::string dir;
  std::vector<std::string> strategies;
  Minutes window = 20;
  double timeout = 7200.0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output;
  std::string format = "csv";
};

int run_bench_cmd(const BenchArgs& a) {
  BenchOptions opt;
  opt.strategies.clear();
  for (const auto& s : a.strategies) opt.strategies.push_back(*parse_strategy(s));
  if (opt.strategies.empty()) {
    opt.strategies = {Strategy::kSingle, Strategy::kIncremental,
                      Strategy::kExponential};
  }
  opt.window = a.window;
  opt.timeout_seconds = a.timeout;
  opt.seed = a.seed;
  opt.parallel = a.jobs;

  std::vector<fs::path> files;
  try {
    files = list_instances(a.dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  const std::vector<BenchRecord> rows = run_bench(files, opt);
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      std::cerr << r.instance << " (" << to_string(r.strategy)
                << "): " << r.error << "\n";
    }
  }
  const std::string text = a.format == "json" ? to_json_text(rows) : to_csv(rows);
  return emit(a.output, text) ? kOk : kBadInput;
}

struct GenerateArgs {
  std::uint64_t seed = 42;
  int days = 1;
  int split = 0;
  std::string output = ".";
  std::string format = "lp";
  GenParams params;
};

int run_generate(const GenerateArgs& a) {
  try {
    check_params(a.params);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const fs::path root(a.output);
  std::error_code ec;
  fs::create_directories(root, ec);
  const std::string ext = a.format == "json" ? ".json" : ".lp";
  auto write = [&](const fs::path& path, const Instance& inst) {
    return emit(path.string(),
                a.format == "json" ? to_json_text(inst) : to_facts(inst));
  };

  for (int d = 1; d <= a.days; ++d) {
    char name[32];
    std::snprintf(name, sizeof name, "day%02d", d);
    // Each day draws from its own stream so adding days keeps earlier ones.
    const Instance day = generate(a.params, a.seed * 1000 + d);
    const fs::path days_dir = a.split > 0 ? root / "days" : root;
    fs::create_directories(days_dir, ec);
    if (!write(days_dir / (std::string(name) + ext), day)) return kBadInput;
    if (a.split <= 0) continue;
    fs::create_directories(root / "instances", ec);
    for (const Instance& sub : split_day(day, a.split)) {
      char sub_name[48];
      std::snprintf(sub_name, sizeof sub_name, "%s-j%02zu", name,
                    sub.jobs.size());
      if (!write(root / "instances" / (std::string(sub_name) + ext), sub)) {
        return kBadInput;
      }
    }
  }
  return kOk;
}

struct ValidateArgs {
  std::string instance;
  std::string schedule;
  std::string output;
  std::string format = "text";
};

int run_validate(const ValidateArgs& a) {
  Instance inst;
  try {
    inst = load_instance(a.instance);
  } catch (const ParseError& e) {
    report_parse_error(a.instance, e);
    return kBadInput;
  }
  Schedule sched;
  try {
    sched = schedule_from_json_text(read_file(a.schedule));
  } catch (const ParseError& e) {
    report_parse_error(a.schedule, e);
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << a.schedule << ": error: " << e.what() << "\n";
    return kBadInput;
  }
  const std::vector<Violation> violations = check_schedule(inst, sched);
  std::string text;
  if (a.format == "json") {
    text = to_json_text(violations);
  } else {
    std::ostringstream out;
    for (const auto& v : violations) {
      out << to_string(v.kind) << ":";
      for (const auto& e : v.entities) out << ' ' << e;
      out << ": " << v.detail << "\n";
    }
    if (violations.empty()) {
      out << "ok: total tardiness " << total_tardiness(inst, sched) << "\n";
    }
    text = out.str();
  }
  if (!emit(a.output, text)) return kBadInput;
  return violations.empty() ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-resource flexible job-shop scheduler"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  const std::vector<std::string> strategy_names{"single", "inc", "exp"};

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Solve one instance");
  cmd_solve->add_option("instance", solve.instance, "Instance file (.lp facts or .json)")
      ->required();
  cmd_solve->add_option("--strategy", solve.strategy, "Tardiness bound strategy")
      ->check(CLI::IsMember(strategy_names))
      ->capture_default_str();
  cmd_solve->add_option("--window", solve.window, "Window size for inc")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_solve->add_option("--timeout", solve.timeout, "Wall-clock budget in seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_solve->add_option("--seed", solve.seed, "Seed recorded in the report")
      ->capture_default_str();
  cmd_solve->add_option("--output", solve.output, "Report path (default stdout)");
  cmd_solve->add_option("--format", solve.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  BenchArgs bench;
  auto* cmd_bench =
      app.add_subcommand("bench", "Run strategies over a directory of instances");
  cmd_bench->add_option("dir", bench.dir, "Directory with .lp/.json instances")
      ->required();
  cmd_bench->add_option("--strategy", bench.strategies,
                        "Strategies to run (repeatable; default all three)")
      ->check(CLI::IsMember(strategy_names))
      ->delimiter(',');
  cmd_bench->add_option("--window", bench.window, "Window size for inc")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_bench->add_option("--timeout", bench.timeout, "Per-run budget in seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench.seed, "Seed recorded in the reports")
      ->capture_default_str();
  cmd_bench->add_option("--jobs", bench.jobs, "Parallel runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_bench->add_option("--output", bench.output, "Result path (default stdout)");
  cmd_bench->add_option("--format", bench.format, "Result format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate day instances");
  cmd_gen->footer(
      "Deadlines: a --tight share of jobs gets a deadline between half and "
      "all of its serial processing time; the rest get their serial time plus "
      "up to one shift. No deadline exceeds --max-deadline-shifts shifts.");
  cmd_gen->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
  cmd_gen->add_option("--days", gen.days, "Number of day instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_gen->add_option("--split", gen.split,
                      "Also write sub-instances of the first k, 2k, ... jobs")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_gen->add_option("--output", gen.output, "Output directory")
      ->capture_default_str();
  cmd_gen->add_option("--format", gen.format, "Instance file format")
      ->check(CLI::IsMember({"lp", "json"}))
      ->capture_default_str();
  auto& gp = gen.params;
  cmd_gen->add_option("--partial-order", gp.partial_order,
                      "Chance to drop each ordered pair of a job (0: strict order)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd_gen->add_option("--min-jobs", gp.min_jobs, "Fewest jobs per day")
      ->capture_default_str();
  cmd_gen->add_option("--max-jobs", gp.max_jobs, "Most jobs per day")
      ->capture_default_str();
  cmd_gen->add_option("--op-types", gp.op_types, "Operation types")
      ->capture_default_str();
  cmd_gen->add_option("--machines", gp.machines, "Machines")->capture_default_str();
  cmd_gen->add_option("--workers", gp.workers, "Workers")->capture_default_str();
  cmd_gen->add_option("--min-ops", gp.min_ops_per_job, "Fewest operations per job")
      ->capture_default_str();
  cmd_gen->add_option("--max-ops", gp.max_ops_per_job, "Most operations per job")
      ->capture_default_str();
  cmd_gen->add_option("--min-duration", gp.min_duration, "Shortest operation (min)")
      ->capture_default_str();
  cmd_gen->add_option("--max-duration", gp.max_duration, "Longest operation (min)")
      ->capture_default_str();
  cmd_gen->add_option("--shift", gp.shift, "Shift length (min)")->capture_default_str();
  cmd_gen->add_option("--machine-share", gp.machine_share,
                      "Share of operation types that need a machine")
      ->capture_default_str();
  cmd_gen->add_option("--worker-skill", gp.worker_skill,
                      "Chance a worker can run a given operation type")
      ->capture_default_str();
  cmd_gen->add_option("--tight", gp.tight_share,
                      "Share of jobs with a deadline below their serial time")
      ->capture_default_str();
  cmd_gen->add_option("--max-deadline-shifts", gp.max_deadline_shifts,
                      "Deadline ceiling in shifts")
      ->capture_default_str();

  ValidateArgs val;
  auto* cmd_val = app.add_subcommand("validate", "Check a schedule against an instance");
  cmd_val->add_option("instance", val.instance, "Instance file")->required();
  cmd_val->add_option("schedule", val.schedule,
                      "Schedule JSON (a solve report is accepted)")
      ->required();
  cmd_val->add_option("--output", val.output, "Report path (default stdout)");
  cmd_val->add_option("--format", val.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (cmd_solve->parsed()) return run_solve(solve);
  if (cmd_bench->parsed()) return run_bench_cmd(bench);
  if (cmd_gen->parsed()) return run_generate(gen);
  if (cmd_val->parsed()) return run_validate(val);
  return kUsage;
}
