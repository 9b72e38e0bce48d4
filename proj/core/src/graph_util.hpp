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

#ifndef MPFJSS_SRC_GRAPH_UTIL_HPP_
#define MPFJSS_SRC_GRAPH_UTIL_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mpfjss::detail {

// Kahn's algorithm over string-labelled nodes. Edges with unknown endpoints
// are ignored.
inline bool has_cycle(
    const std::vector<std::string>& nodes,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& n : nodes) indegree[n];
  for (const auto& [a, b] : edges) {
    if (!indegree.contains(a) || !indegree.contains(b)) continue;
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::string> ready;
  for (const auto& [n, d] : indegree) {
    if (d == 0) ready.push_back(n);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::string n = std::move(ready.back());
    ready.pop_back();
    ++seen;
    for (const auto& m : succ[n]) {
      if (--indegree[m] == 0) ready.push_back(m);
    }
  }
  return seen != indegree.size();
}

}  // namespace mpfjss::detail

#endif  // MPFJSS_SRC_GRAPH_UTIL_HPP_
