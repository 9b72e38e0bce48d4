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

#include "mpfjss/bound_search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "json_convert.hpp"

namespace mpfjss {

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs one probe and appends it to the log.
Verdict run_probe(const ProbeFn& probe, Minutes bound, BoundResult& out) {
  const auto t0 = Clock::now();
  const Verdict v = probe(bound);
  out.probes.push_back({bound, v, seconds_since(t0)});
  return v;
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kSingle: return "single";
    case Strategy::kIncremental: return "inc";
    case Strategy::kExponential: return "exp";
  }
  return "exp";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "single") return Strategy::kSingle;
  if (name == "inc") return Strategy::kIncremental;
  if (name == "exp") return Strategy::kExponential;
  return std::nullopt;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kIncumbent: return "incumbent";
    case SolveStatus::kBoundNotFound: return "bound-not-found";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "timeout";
}

BoundResult incremental_bound(const ProbeFn& probe, Minutes window,
                              Minutes ceiling) {
  if (window <= 0) throw std::invalid_argument("window must be positive");
  const auto t0 = Clock::now();
  BoundResult out;
  out.strategy = Strategy::kIncremental;
  for (Minutes b = 0;; b += window) {
    const Verdict v = run_probe(probe, b, out);
    if (v == Verdict::kSat) {
      out.cap = b;
      out.window_low = std::max<Minutes>(0, b - window);
      out.complete = true;
      break;
    }
    if (v == Verdict::kUnknown) break;
    // Past a cap known to be satisfiable: the probe oracle is inconsistent.
    if (b >= ceiling) {
      out.complete = true;
      break;
    }
  }
  out.search_seconds = seconds_since(t0);
  return out;
}

BoundResult exponential_bound(const ProbeFn& probe, Minutes ceiling) {
  if (ceiling < 0) throw std::invalid_argument("ceiling must be >= 0");
  const auto t0 = Clock::now();
  BoundResult out;
  out.strategy = Strategy::kExponential;
  auto finish = [&]() {
    out.search_seconds = seconds_since(t0);
    return out;
  };

  Verdict v = run_probe(probe, 0, out);
  if (v == Verdict::kSat) {
    out.cap = 0;
    out.complete = true;
    return finish();
  }
  if (v == Verdict::kUnknown || ceiling == 0) {
    out.complete = v != Verdict::kUnknown;
    return finish();
  }

  // Largest cap known UNSAT, smallest known SAT.
  Minutes lo = 0;
  Minutes hi = -1;
  for (Minutes b = 1;; b = std::min(2 * b, ceiling)) {
    v = run_probe(probe, b, out);
    if (v == Verdict::kSat) {
      hi = b;
      break;
    }
    if (v == Verdict::kUnknown) return finish();
    lo = b;
    if (b == ceiling) {
      out.complete = true;
      return finish();
    }
  }

  out.cap = hi;
  while (hi - lo > 1) {
    const Minutes mid = lo + (hi - lo) / 2;
    v = run_probe(probe, mid, out);
    if (v == Verdict::kUnknown) return finish();
    if (v == Verdict::kSat) {
      hi = mid;
      out.cap = hi;
    } else {
      lo = mid;
    }
  }
  out.complete = true;
  return finish();
}

Minutes single_shot_bound(const Instance& inst) { return total_duration(inst); }

namespace {

// Probe callable over `decide` that keeps the schedule of every SAT answer.
struct DecideProbe {
  const Instance& inst;
  SearchLimits limits;
  std::map<Minutes, Schedule> witnesses;

  Verdict operator()(Minutes cap) {
    DecideResult r = decide(inst, cap, limits);
    if (r.verdict == Verdict::kSat) witnesses[cap] = std::move(*r.schedule);
    return r.verdict;
  }
};

BoundSearch with_witness(BoundResult result, DecideProbe& probe) {
  BoundSearch out{std::move(result), std::nullopt};
  if (out.result.cap) {
    auto it = probe.witnesses.find(*out.result.cap);
    if (it != probe.witnesses.end()) out.witness = std::move(it->second);
  }
  return out;
}

}  // namespace

BoundSearch incremental_bound(const Instance& inst, Minutes window,
                              const SearchLimits& limits) {
  DecideProbe probe{inst, limits, {}};
  BoundResult r = incremental_bound(
      [&](Minutes b) { return probe(b); }, window, single_shot_bound(inst));
  return with_witness(std::move(r), probe);
}

BoundSearch exponential_bound(const Instance& inst,
                              const SearchLimits& limits) {
  DecideProbe probe{inst, limits, {}};
  BoundResult r = exponential_bound([&](Minutes b) { return probe(b); },
                                    single_shot_bound(inst));
  return with_witness(std::move(r), probe);
}

SolveReport solve_with_strategy(const Instance& inst,
                                const StrategyConfig& config) {
  if (config.timeout_seconds < 0) {
    throw std::invalid_argument("timeout must be >= 0");
  }
  const auto start = Clock::now();
  SearchLimits limits;
  limits.symmetry_breaking = config.symmetry_breaking;
  limits.deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(config.timeout_seconds));

  SolveReport report;
  report.config = config;

  std::optional<Schedule> witness;
  switch (config.strategy) {
    case Strategy::kSingle:
      report.bound.strategy = Strategy::kSingle;
      report.bound.cap = single_shot_bound(inst);
      report.bound.complete = true;
      report.bound.search_seconds = seconds_since(start);
      break;
    case Strategy::kIncremental: {
      BoundSearch bs = incremental_bound(inst, config.window, limits);
      report.bound = std::move(bs.result);
      witness = std::move(bs.witness);
      break;
    }
    case Strategy::kExponential: {
      BoundSearch bs = exponential_bound(inst, limits);
      report.bound = std::move(bs.result);
      witness = std::move(bs.witness);
      break;
    }
  }
  report.search_seconds = report.bound.search_seconds;

  if (!report.bound.cap) {
    report.status = SolveStatus::kBoundNotFound;
    return report;
  }

  const auto opt_start = Clock::now();
  OptimizeResult opt = optimize(inst, *report.bound.cap, limits,
                                witness ? &*witness : nullptr);
  report.opt_seconds = seconds_since(opt_start);
  report.schedule = std::move(opt.best);
  report.proven_optimal = opt.proven_optimal;
  if (report.proven_optimal) {
    report.status = SolveStatus::kOptimal;
  } else if (report.schedule) {
    report.status = SolveStatus::kIncumbent;
  } else {
    report.status = SolveStatus::kTimeout;
  }
  return report;
}

std::string to_json_text(const SolveReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["strategy"] = to_string(report.bound.strategy);
  if (report.bound.strategy == Strategy::kIncremental) {
    doc["window"] = report.config.window;
    doc["window_low"] = report.bound.window_low;
  }
  doc["seed"] = report.config.seed;
  doc["verdict"] = to_string(report.status);
  doc["cap"] = report.bound.cap ? nlohmann::ordered_json(*report.bound.cap)
                                : nlohmann::ordered_json(nullptr);
  doc["bound_complete"] = report.bound.complete;
  auto probes = nlohmann::ordered_json::array();
  for (const auto& p : report.bound.probes) {
    probes.push_back({{"bound", p.bound},
                      {"verdict", to_string(p.verdict)},
                      {"seconds", p.seconds}});
  }
  doc["probes"] = std::move(probes);
  doc["search_seconds"] = report.search_seconds;
  doc["opt_seconds"] = report.opt_seconds;
  doc["total_tardiness"] =
      report.schedule ? nlohmann::ordered_json(report.schedule->total_tardiness)
                      : nlohmann::ordered_json(nullptr);
  doc["proven_optimal"] = report.proven_optimal;
  doc["schedule"] = report.schedule
                        ? nlohmann::ordered_json(
                              detail::schedule_to_json(*report.schedule))
                        : nlohmann::ordered_json(nullptr);
  return doc.dump(indent);
}

}  // namespace mpfjss
