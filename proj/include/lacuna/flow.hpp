#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lacuna/graph.hpp"

namespace lacuna {

// Dinic max-flow on integer capacities. Arcs are stored in pairs so that
// arc ^ 1 is the residual twin.
class MaxFlow {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

  explicit MaxFlow(int node_count);

  // Returns the arc id; capacity may later be changed with set_capacity.
  int add_arc(int from, int to, Capacity capacity);
  void set_capacity(int arc, Capacity capacity);
  Capacity flow_on(int arc) const { return flow_[static_cast<std::size_t>(arc)]; }

  // Resets all flow to zero and returns the maximum source -> target flow.
  // Stops early once `goal` units have been routed.
  Capacity solve(int source, int target, Capacity goal = kInfinite);

  int node_count() const noexcept { return static_cast<int>(first_.size()); }

 private:
  bool build_levels(int source, int target);
  Capacity push(int node, int target, Capacity limit);

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<Capacity> capacity_;
  std::vector<Capacity> flow_;
  std::vector<int> first_;
  std::vector<int> level_;
  std::vector<int> cursor_;
  std::vector<int> queue_;
};

// Decides whether some orientation has out_O(v) <= grains[slot(v)] at every
// non-sink v. Network: source -> one unit node per edge -> its two endpoint
// nodes -> target, with endpoint capacity = grains (unbounded at the sink).
// Feasible iff the max flow saturates every edge node. Holds scratch
// buffers; one instance per worker.
class OrientationFlow {
 public:
  explicit OrientationFlow(const Graph& g);

  bool feasible(std::span<const int> grains);

  // After a feasible call: the tail chosen for each edge.
  std::vector<Vertex> last_tails() const;

 private:
  const Graph* graph_;
  MaxFlow network_;
  int source_;
  int target_;
  std::vector<int> vertex_arc_;          // slot -> vertex->target arc
  std::vector<std::pair<int, int>> edge_arcs_;  // edge -> (to low, to high)
};

// Exponential reference: for every set S of non-sink vertices, the number of
// edges inside S is at most the grains on S. Throws Error(kSizeCap) when
// |V| > 20.
bool hall_condition_check(const Graph& g, std::span<const int> grains);

}  // namespace lacuna
