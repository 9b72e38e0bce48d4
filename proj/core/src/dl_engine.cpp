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

#include "mpfjss/dl_engine.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace mpfjss::dl {

namespace {

Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("difference-logic weight overflow");
  }
  return r;
}

using HeapEntry = std::pair<Weight, std::uint32_t>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>,
                                    std::greater<HeapEntry>>;

}  // namespace

AssertResult AssertResult::conflict(std::vector<Constraint> cycle) {
  AssertResult r;
  r.cycle_ = std::move(cycle);
  return r;
}

Weight AssertResult::cycle_weight() const {
  Weight w = 0;
  for (const auto& c : cycle_) w = checked_add(w, c.k);
  return w;
}

Engine::Engine() {
  potential_.push_back(0);
  upper_.push_back(0);
  to_zero_.push_back(0);
  out_.emplace_back();
  in_.emplace_back();
  gamma_.push_back(0);
  pred_edge_.push_back(-1);
  done_.push_back(0);
}

Var Engine::new_var(std::string name) {
  const Var v{static_cast<std::uint32_t>(names_.size())};
  names_.push_back(std::move(name));
  potential_.push_back(0);
  upper_.push_back(kInf);
  to_zero_.push_back(kInf);
  out_.emplace_back();
  in_.emplace_back();
  gamma_.push_back(0);
  pred_edge_.push_back(-1);
  done_.push_back(0);
  return v;
}

const std::string& Engine::name(Var v) const {
  static const std::string kZeroName = "z0";
  if (v.is_zero()) return kZeroName;
  check_var(v);
  return names_[v.index];
}

void Engine::check_var(Var v) const {
  if (!v.is_zero() && v.index >= names_.size()) {
    throw std::out_of_range("unknown difference-logic variable");
  }
}

std::uint32_t Engine::node(Var v) const {
  return v.is_zero() ? 0 : v.index + 1;
}

Var Engine::var_of(std::uint32_t n) const {
  return n == 0 ? Var::zero() : Var{n - 1};
}

Constraint Engine::constraint_of(const Edge& e) const {
  return {var_of(e.to), var_of(e.from), e.weight};
}

AssertResult Engine::assert_upper(Var x, Var y, Weight k) {
  check_var(x);
  check_var(y);
  const Constraint c{x, y, k};
  constraints_.push_back(c);
  if (!feasible()) return AssertResult::conflict(conflict_);

  const Edge e{node(y), node(x), k};
  if (e.from == e.to) {
    if (k >= 0) return AssertResult::ok();
    conflict_ = {c};
    return AssertResult::conflict(conflict_);
  }

  std::vector<Constraint> cycle;
  if (!repair_potential(e, &cycle)) {
    conflict_ = std::move(cycle);
    return AssertResult::conflict(conflict_);
  }

  const auto idx = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(e);
  out_[e.from].push_back(idx);
  in_[e.to].push_back(idx);

  if (upper_[e.from] != kInf) {
    const Weight cand = checked_add(upper_[e.from], k);
    if (cand < upper_[e.to]) propagate_upper(e.to, cand);
  }
  if (to_zero_[e.to] != kInf) {
    const Weight cand = checked_add(k, to_zero_[e.to]);
    if (cand < to_zero_[e.from]) propagate_to_zero(e.from, cand);
  }
  return AssertResult::ok();
}

// Restores potential(to) <= potential(from) + weight by lowering potentials
// along out-edges, in order of the most negative required change. Reaching
// `from` again means the new edge closes a negative cycle.
bool Engine::repair_potential(const Edge& e, std::vector<Constraint>* cycle) {
  const Weight slack0 =
      checked_add(potential_[e.from], e.weight) - potential_[e.to];
  if (slack0 >= 0) return true;

  std::vector<std::uint32_t> touched;
  std::vector<std::pair<std::uint32_t, Weight>> changed;
  MinHeap heap;

  gamma_[e.to] = slack0;
  pred_edge_[e.to] = -1;
  touched.push_back(e.to);
  heap.push({slack0, e.to});

  bool ok = true;
  while (!heap.empty() && ok) {
    const auto [g, s] = heap.top();
    heap.pop();
    if (done_[s] || g != gamma_[s]) continue;
    done_[s] = 1;
    changed.emplace_back(s, potential_[s]);
    potential_[s] = checked_add(potential_[s], g);
    for (std::uint32_t idx : out_[s]) {
      const Edge& out = edges_[idx];
      const std::uint32_t t = out.to;
      if (done_[t]) continue;
      const Weight cand =
          checked_add(potential_[s], out.weight) - potential_[t];
      if (cand >= gamma_[t]) continue;
      if (gamma_[t] == 0) touched.push_back(t);
      gamma_[t] = cand;
      pred_edge_[t] = idx;
      if (t == e.from) {
        cycle->push_back(constraint_of(e));
        std::uint32_t cur = t;
        while (cur != e.to) {
          const Edge& back = edges_[static_cast<std::size_t>(pred_edge_[cur])];
          cycle->push_back(constraint_of(back));
          cur = back.from;
        }
        ok = false;
        break;
      }
      heap.push({cand, t});
    }
  }

  for (std::uint32_t n : touched) {
    gamma_[n] = 0;
    done_[n] = 0;
    pred_edge_[n] = -1;
  }
  if (!ok) {
    for (auto it = changed.rbegin(); it != changed.rend(); ++it) {
      potential_[it->first] = it->second;
    }
  }
  return ok;
}

void Engine::propagate_upper(std::uint32_t start, Weight value) {
  MinHeap heap;
  bound_log_.push_back({start, true, upper_[start]});
  upper_[start] = value;
  heap.push({value - potential_[start], start});
  while (!heap.empty()) {
    const auto [key, s] = heap.top();
    heap.pop();
    if (key != upper_[s] - potential_[s]) continue;
    for (std::uint32_t idx : out_[s]) {
      const Edge& e = edges_[idx];
      const Weight cand = checked_add(upper_[s], e.weight);
      if (cand < upper_[e.to]) {
        bound_log_.push_back({e.to, true, upper_[e.to]});
        upper_[e.to] = cand;
        heap.push({cand - potential_[e.to], e.to});
      }
    }
  }
}

void Engine::propagate_to_zero(std::uint32_t start, Weight value) {
  MinHeap heap;
  bound_log_.push_back({start, false, to_zero_[start]});
  to_zero_[start] = value;
  heap.push({checked_add(value, potential_[start]), start});
  while (!heap.empty()) {
    const auto [key, s] = heap.top();
    heap.pop();
    if (key != to_zero_[s] + potential_[s]) continue;
    for (std::uint32_t idx : in_[s]) {
      const Edge& e = edges_[idx];
      const Weight cand = checked_add(e.weight, to_zero_[s]);
      if (cand < to_zero_[e.from]) {
        bound_log_.push_back({e.from, false, to_zero_[e.from]});
        to_zero_[e.from] = cand;
        heap.push({checked_add(cand, potential_[e.from]), e.from});
      }
    }
  }
}

void Engine::push() {
  levels_.push_back(
      {constraints_.size(), edges_.size(), bound_log_.size(), feasible()});
}

void Engine::pop() {
  if (levels_.empty()) throw std::logic_error("pop() without matching push()");
  const Level level = levels_.back();
  levels_.pop_back();

  constraints_.resize(level.constraints);
  while (edges_.size() > level.edges) {
    const Edge& e = edges_.back();
    out_[e.from].pop_back();
    in_[e.to].pop_back();
    edges_.pop_back();
  }
  while (bound_log_.size() > level.bound_changes) {
    const BoundChange& b = bound_log_.back();
    (b.upper ? upper_ : to_zero_)[b.node] = b.old;
    bound_log_.pop_back();
  }
  // The potential needs no restoring: it stays feasible for a subset of the
  // edges.
  if (level.feasible) conflict_.clear();
}

std::optional<Weight> Engine::upper_bound(Var v) const {
  check_var(v);
  const Weight u = upper_[node(v)];
  if (u == kInf) return std::nullopt;
  return u;
}

std::optional<Weight> Engine::lower_bound(Var v) const {
  check_var(v);
  const Weight d = to_zero_[node(v)];
  if (d == kInf) return std::nullopt;
  return -d;
}

std::vector<Weight> Engine::solution() const {
  if (!feasible()) {
    throw std::logic_error("solution() requested from an infeasible system");
  }
  const std::size_t n = potential_.size();
  std::vector<Weight> value(n, 0);
  bool all_bounded = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (to_zero_[i] == kInf) {
      all_bounded = false;
    } else {
      value[i] = -to_zero_[i];
    }
  }

  if (!all_bounded) {
    // Variables bounded below keep their minimum (nothing unbounded can
    // reach them). The rest take the largest value <= 0 allowed by the
    // edges entering them: a multi-source shortest path seeded with the
    // current values.
    MinHeap heap;
    for (std::size_t i = 0; i < n; ++i) {
      heap.push({value[i] - potential_[i], static_cast<std::uint32_t>(i)});
    }
    while (!heap.empty()) {
      const auto [key, s] = heap.top();
      heap.pop();
      if (key != value[s] - potential_[s]) continue;
      for (std::uint32_t idx : out_[s]) {
        const Edge& e = edges_[idx];
        const Weight cand = checked_add(value[s], e.weight);
        if (cand < value[e.to]) {
          value[e.to] = cand;
          heap.push({cand - potential_[e.to], e.to});
        }
      }
    }
  }
  return std::vector<Weight>(value.begin() + 1, value.end());
}

}  // namespace mpfjss::dl
