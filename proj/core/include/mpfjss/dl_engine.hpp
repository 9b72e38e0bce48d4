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

// Incremental difference-logic engine.
//
// A constraint x - y <= k is stored as the edge y -> x of weight k. The
// conjunction is satisfiable iff that graph has no negative cycle. The engine
// keeps a feasible potential and repairs it on every assertion, touching only
// the vertices whose potential must drop (Cotton & Maler style incremental
// consistency). It also keeps, per variable, the tightest bounds relative to
// the engine-owned zero point z0:
//
//   upper_bound(v) = dist(z0 -> v)       v - z0 <= upper_bound(v)
//   lower_bound(v) = -dist(v -> z0)      z0 - v <= -lower_bound(v)
//
// Both are maintained incrementally with Dijkstra over reduced costs and
// restored from a trail on pop().

#ifndef MPFJSS_DL_ENGINE_HPP_
#define MPFJSS_DL_ENGINE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mpfjss::dl {

using Weight = std::int64_t;

// Opaque dense handle. User variables are numbered from 0 in creation order;
// the zero point has its own reserved handle.
struct Var {
  std::uint32_t index = 0;

  static constexpr Var zero() {
    return Var{std::numeric_limits<std::uint32_t>::max()};
  }
  constexpr bool is_zero() const { return *this == zero(); }

  friend constexpr auto operator<=>(Var, Var) = default;
};

// x - y <= k.
struct Constraint {
  Var x;
  Var y;
  Weight k = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

class AssertResult {
 public:
  static AssertResult ok() { return AssertResult(); }
  static AssertResult conflict(std::vector<Constraint> cycle);

  bool feasible() const { return cycle_.empty(); }
  explicit operator bool() const { return feasible(); }

  // Constraints forming a negative cycle; empty when feasible.
  const std::vector<Constraint>& cycle() const { return cycle_; }
  Weight cycle_weight() const;

 private:
  std::vector<Constraint> cycle_;
};

class Engine {
 public:
  Engine();

  Var new_var(std::string name = {});
  std::size_t num_vars() const { return names_.size(); }
  const std::string& name(Var v) const;

  // Asserts x - y <= k at the current level. On a negative cycle the
  // constraint is still recorded (so the constraint set is the multiset of
  // everything asserted) but the engine turns infeasible until the level is
  // popped; later assertions at that level are recorded and report the same
  // cycle.
  AssertResult assert_upper(Var x, Var y, Weight k);

  void push();
  // Throws std::logic_error without a matching push().
  void pop();
  std::size_t level() const { return levels_.size(); }

  bool feasible() const { return conflict_.empty(); }
  const std::vector<Constraint>& last_conflict() const { return conflict_; }
  std::span<const Constraint> constraints() const { return constraints_; }

  // Tightest bounds relative to z0; nullopt when unbounded.
  std::optional<Weight> upper_bound(Var v) const;
  std::optional<Weight> lower_bound(Var v) const;

  // Canonical solution, indexed by Var::index. Each variable takes its
  // lower bound; a variable with no bound below takes min(0, upper bound),
  // which keeps the assignment feasible. Throws std::logic_error when
  // infeasible.
  std::vector<Weight> solution() const;

 private:
  static constexpr Weight kInf = std::numeric_limits<Weight>::max();

  struct Edge {
    std::uint32_t from;
    std::uint32_t to;
    Weight weight;
  };
  struct BoundChange {
    std::uint32_t node;
    bool upper;  // false: distance to z0
    Weight old;
  };
  struct Level {
    std::size_t constraints;
    std::size_t edges;
    std::size_t bound_changes;
    bool feasible;
  };

  std::uint32_t node(Var v) const;
  Var var_of(std::uint32_t node) const;
  Constraint constraint_of(const Edge& e) const;
  void check_var(Var v) const;

  bool repair_potential(const Edge& e, std::vector<Constraint>* cycle);
  void propagate_upper(std::uint32_t start, Weight value);
  void propagate_to_zero(std::uint32_t start, Weight value);

  std::vector<std::string> names_;
  // Node 0 is z0; user var i is node i + 1.
  std::vector<Weight> potential_;
  std::vector<Weight> upper_;    // dist(z0 -> n)
  std::vector<Weight> to_zero_;  // dist(n -> z0)
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<Edge> edges_;
  std::vector<Constraint> constraints_;
  std::vector<BoundChange> bound_log_;
  std::vector<Level> levels_;
  std::vector<Constraint> conflict_;

  // Scratch buffers reused across assertions.
  std::vector<Weight> gamma_;
  std::vector<std::int64_t> pred_edge_;
  std::vector<char> done_;
};

}  // namespace mpfjss::dl

#endif  // MPFJSS_DL_ENGINE_HPP_
