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

#include "mpfjss/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "json_convert.hpp"

namespace mpfjss {

void fill_tardiness(const Instance& inst, Schedule& sched) {
  sched.tardiness.clear();
  sched.total_tardiness = 0;
  for (const auto& job : inst.jobs) {
    Minutes completion = 0;
    for (const auto& a : sched.assignments) {
      if (a.job == job.id) completion = std::max(completion, a.end);
    }
    const Minutes late = std::max<Minutes>(0, completion - job.deadline);
    sched.tardiness[job.id] = late;
    sched.total_tardiness += late;
  }
}

namespace detail {

using nlohmann::json;

json schedule_to_json(const Schedule& sched) {
  json assignments = json::array();
  for (const auto& a : sched.assignments) {
    json res = json::array();
    for (const auto& r : a.resources) {
      res.push_back({{"class", r.resource_class}, {"index", r.index}});
    }
    assignments.push_back({{"job", a.job},
                           {"op", a.op},
                           {"start", a.start},
                           {"end", a.end},
                           {"resources", res}});
  }
  return {{"assignments", assignments},
          {"tardiness", sched.tardiness},
          {"total_tardiness", sched.total_tardiness},
          {"proven_optimal", sched.proven_optimal}};
}

Schedule schedule_from_json(const json& doc) {
  const json& s = doc.contains("schedule") && doc.at("schedule").is_object()
                      ? doc.at("schedule")
                      : doc;
  Schedule sched;
  try {
    for (const json& a : s.at("assignments")) {
      Assignment as;
      as.job = a.at("job").get<std::string>();
      as.op = a.at("op").get<std::string>();
      as.start = a.at("start").get<Minutes>();
      as.end = a.at("end").get<Minutes>();
      for (const json& r : a.at("resources")) {
        if (r.is_array()) {
          as.resources.push_back(
              {r.at(0).get<std::string>(), r.at(1).get<int>()});
        } else {
          as.resources.push_back(
              {r.at("class").get<std::string>(), r.at("index").get<int>()});
        }
      }
      sched.assignments.push_back(std::move(as));
    }
    if (s.contains("tardiness")) {
      sched.tardiness =
          s.at("tardiness").get<std::map<std::string, Minutes>>();
    }
    sched.total_tardiness = s.value("total_tardiness", Minutes{0});
    sched.proven_optimal = s.value("proven_optimal", false);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed schedule: ") +
                                e.what());
  }
  return sched;
}

}  // namespace detail

std::string to_json_text(const Schedule& sched, int indent) {
  return detail::schedule_to_json(sched).dump(indent);
}

Schedule schedule_from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed schedule: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("malformed schedule: expected an object");
  }
  return detail::schedule_from_json(doc);
}

}  // namespace mpfjss
