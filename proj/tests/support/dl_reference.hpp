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


#ifndef MPFJSS_TESTS_SUPPORT_DL_REFERENCE_HPP_
#define MPFJSS_TESTS_SUPPORT_DL_REFERENCE_HPP_

#include <limits>
#include <vector>

#include "mpfjss/dl_engine.hpp"
#include "support/test_support.hpp"

namespace mpfjss::testing {

// From-scratch Bellman-Ford over a constraint list. Node 0 is z0, var i is
// node i + 1; x - y <= k is the edge y -> x with weight k.
struct DlReference {
  static constexpr dl::Weight kInf =
      std::numeric_limits<dl::Weight>::max() / 4;

  int vars = 0;
  std::vector<dl::Constraint> cs;

  static int node(dl::Var v) {
    return v.is_zero() ? 0 : static_cast<int>(v.index) + 1;
  }

  bool feasible() const {
    std::vector<dl::Weight> d(vars + 1, 0);
    for (int round = 0; round <= vars + 1; ++round) {
      bool changed = false;
      for (const auto& c : cs) {
        if (d[node(c.y)] + c.k < d[node(c.x)]) {
          d[node(c.x)] = d[node(c.y)] + c.k;
          changed = true;
        }
      }
      if (!changed) return true;
    }
    return false;
  }

  // Shortest distances from `src` along the edges, or against them when
  // `backward`. Meaningful only when feasible.
  std::vector<dl::Weight> dist(int src, bool backward) const {
    std::vector<dl::Weight> d(vars + 1, kInf);
    d[src] = 0;
    for (int round = 0; round <= vars; ++round) {
      for (const auto& c : cs) {
        const int from = backward ? node(c.x) : node(c.y);
        const int to = backward ? node(c.y) : node(c.x);
        if (d[from] < kInf && d[from] + c.k < d[to]) d[to] = d[from] + c.k;
      }
    }
    return d;
  }
};

inline dl::Var random_dl_var(Rng& rng, int vars) {
  const auto i = rng.uniform(-1, vars - 1);
  return i < 0 ? dl::Var::zero() : dl::Var{static_cast<std::uint32_t>(i)};
}

inline bool satisfied(const std::vector<dl::Weight>& sol,
                      const dl::Constraint& c) {
  auto val = [&](dl::Var v) { return v.is_zero() ? 0 : sol[v.index]; };
  return val(c.x) - val(c.y) <= c.k;
}

}  // namespace mpfjss::testing

#endif  // MPFJSS_TESTS_SUPPORT_DL_REFERENCE_HPP_
