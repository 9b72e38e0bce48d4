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


#ifndef MPFJSS_TESTS_SUPPORT_VALIDATOR_FIXTURE_HPP_
#define MPFJSS_TESTS_SUPPORT_VALIDATOR_FIXTURE_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpfjss/instance.hpp"
#include "mpfjss/schedule.hpp"
#include "mpfjss/validator.hpp"

namespace mpfjss::testing {

// j1: a (2 min, worker + machine) then b; j2: c. Two workers, one machine.
inline Instance fixture() {
  Instance inst;
  inst.operations = {{"a", 2}, {"b", 1}, {"c", 1}};
  inst.demands = {{"a", {"w", "m"}}, {"b", {"w"}}, {"c", {"w"}}};
  inst.resources = {{"w", 1, {"a", "b", "c"}},
                    {"w", 2, {"a", "b", "c"}},
                    {"m", 1, {"a"}}};
  inst.jobs = {{"j1", {"a", "b"}, {{"a", "b"}}, 3}, {"j2", {"c"}, {}, 5}};
  return inst;
}

inline Schedule fixture_schedule() {
  Schedule s;
  s.assignments = {{"j1", "a", 0, 2, {{"w", 1}, {"m", 1}}},
                   {"j1", "b", 2, 3, {{"w", 1}}},
                   {"j2", "c", 0, 1, {{"w", 2}}}};
  s.tardiness = {{"j1", 0}, {"j2", 0}};
  s.total_tardiness = 0;
  return s;
}

inline Assignment& find(Schedule& s, const std::string& job, const std::string& op) {
  for (auto& a : s.assignments) {
    if (a.job == job && a.op == op) return a;
  }
  throw std::logic_error("no such assignment");
}

struct Mutation {
  const char* name;
  ViolationKind kind;
  std::function<void(Schedule&)> apply;
};

// Each mutation of fixture_schedule() breaks exactly one rule.
inline const std::vector<Mutation>& mutations() {
  static const std::vector<Mutation> all = {
      {"drop-machine", ViolationKind::kDemandUnmet,
       [](Schedule& s) { find(s, "j1", "a").resources.pop_back(); }},
      {"stretch", ViolationKind::kPreemptionOrNegativeTime,
       [](Schedule& s) { find(s, "j2", "c").end = 2; }},
      {"same-job-overlap", ViolationKind::kSameJobOverlap,
       [](Schedule& s) {
         auto& b = find(s, "j1", "b");
         b.start = 1;
         b.end = 2;
         b.resources = {{"w", 2}};
       }},
      {"shared-worker", ViolationKind::kResourceOverlap,
       [](Schedule& s) { find(s, "j2", "c").resources = {{"w", 1}}; }},
      {"reversed-precedence", ViolationKind::kPrecedenceOrder,
       [](Schedule& s) {
         auto& a = find(s, "j1", "a");
         auto& b = find(s, "j1", "b");
         a.start = 1;
         a.end = 3;
         b.start = 0;
         b.end = 1;
       }},
      {"wrong-tardiness", ViolationKind::kTardinessMiscomputed,
       [](Schedule& s) {
         s.tardiness["j1"] = 1;
         s.total_tardiness = 1;
       }},
  };
  return all;
}

}  // namespace mpfjss::testing

#endif  // MPFJSS_TESTS_SUPPORT_VALIDATOR_FIXTURE_HPP_
