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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mpfjss/dl_engine.hpp"

namespace {

using mpfjss::dl::Engine;
using mpfjss::dl::Var;

// Chain of n vars with random slack edges, all feasible.
void BM_AssertChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Engine e;
    std::vector<Var> v;
    for (int i = 0; i < n; ++i) v.push_back(e.new_var());
    for (int i = 0; i + 1 < n; ++i) e.assert_upper(v[i], v[i + 1], -1);
    benchmark::DoNotOptimize(e.upper_bound(v.back()));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_AssertChain)->Arg(64)->Arg(512)->Arg(4096);

// Push, assert a random edge, pop; the pattern the search uses.
void BM_PushAssertPop(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Engine e;
  std::vector<Var> v;
  for (int i = 0; i < n; ++i) {
    v.push_back(e.new_var());
    e.assert_upper(Var::zero(), v[i], 0);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> weight(-3, 10);
  for (int i = 0; i < 2 * n; ++i) {
    const int a = pick(rng);
    const int b = pick(rng);
    e.push();
    if (!e.assert_upper(v[a], v[b], weight(rng))) e.pop();
  }
  for (auto _ : state) {
    e.push();
    benchmark::DoNotOptimize(e.assert_upper(v[pick(rng)], v[pick(rng)], weight(rng)));
    e.pop();
  }
}
BENCHMARK(BM_PushAssertPop)->Arg(32)->Arg(256);

}  // namespace
