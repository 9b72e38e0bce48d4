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

#ifndef MPFJSS_SRC_JSON_CONVERT_HPP_
#define MPFJSS_SRC_JSON_CONVERT_HPP_

#include <nlohmann/json.hpp>

#include "mpfjss/schedule.hpp"

namespace mpfjss::detail {

nlohmann::json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const nlohmann::json& doc);

}  // namespace mpfjss::detail

#endif  // MPFJSS_SRC_JSON_CONVERT_HPP_
