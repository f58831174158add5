#include "lacuna/flow.hpp"

#include <algorithm>
#include <bit>

#include "lacuna/error.hpp"

namespace lacuna {

MaxFlow::MaxFlow(int node_count)
    : first_(static_cast<std::size_t>(node_count), -1),
      level_(static_cast<std::size_t>(node_count)),
      cursor_(static_cast<std::size_t>(node_count)) {
  queue_.reserve(static_cast<std::size_t>(node_count));
}

int MaxFlow::add_arc(int from, int to, Capacity capacity) {
  const int id = static_cast<int>(head_.size());
  head_.push_back(to);
  next_.push_back(first_[static_cast<std::size_t>(from)]);
  capacity_.push_back(capacity);
  flow_.push_back(0);
  first_[static_cast<std::size_t>(from)] = id;

  head_.push_back(from);
  next_.push_back(first_[static_cast<std::size_t>(to)]);
  capacity_.push_back(0);
  flow_.push_back(0);
  first_[static_cast<std::size_t>(to)] = id + 1;
  return id;
}

void MaxFlow::set_capacity(int arc, Capacity capacity) {
  capacity_[static_cast<std::size_t>(arc)] = capacity;
}

bool MaxFlow::build_levels(int source, int target) {
  std::fill(level_.begin(), level_.end(), -1);
  queue_.clear();
  queue_.push_back(source);
  level_[static_cast<std::size_t>(source)] = 0;
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const int u = queue_[qi];
    for (int a = first_[static_cast<std::size_t>(u)]; a != -1;
         a = next_[static_cast<std::size_t>(a)]) {
      const auto au = static_cast<std::size_t>(a);
      const int v = head_[au];
      if (level_[static_cast<std::size_t>(v)] < 0 && flow_[au] < capacity_[au]) {
        level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
        queue_.push_back(v);
      }
    }
  }
  return level_[static_cast<std::size_t>(target)] >= 0;
}

MaxFlow::Capacity MaxFlow::push(int node, int target, Capacity limit) {
  if (node == target) return limit;
  Capacity pushed = 0;
  for (int& a = cursor_[static_cast<std::size_t>(node)]; a != -1;
       a = next_[static_cast<std::size_t>(a)]) {
    const auto au = static_cast<std::size_t>(a);
    const int v = head_[au];
    if (level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(node)] + 1 ||
        flow_[au] >= capacity_[au]) {
      continue;
    }
    const Capacity got = push(v, target, std::min(limit - pushed, capacity_[au] - flow_[au]));
    if (got > 0) {
      flow_[au] += got;
      flow_[au ^ 1U] -= got;
      pushed += got;
      if (pushed == limit) break;
    }
  }
  return pushed;
}

MaxFlow::Capacity MaxFlow::solve(int source, int target, Capacity goal) {
  std::fill(flow_.begin(), flow_.end(), 0);
  Capacity total = 0;
  while (total < goal && build_levels(source, target)) {
    std::copy(first_.begin(), first_.end(), cursor_.begin());
    while (total < goal) {
      const Capacity got = push(source, target, goal - total);
      if (got == 0) break;
      total += got;
    }
  }
  return total;
}

namespace {

int flow_node_count(const Graph& g) {
  return static_cast<int>(g.edge_count()) + g.vertex_count() + 2;
}

}  // namespace

// Node layout: [0, E) edge nodes, [E, E+V) vertex nodes, then source, target.
OrientationFlow::OrientationFlow(const Graph& g)
    : graph_(&g),
      network_(flow_node_count(g)),
      source_(static_cast<int>(g.edge_count()) + g.vertex_count()),
      target_(source_ + 1),
      vertex_arc_(g.non_sink_count(), -1) {
  const int edge_base = 0;
  const int vertex_base = static_cast<int>(g.edge_count());
  edge_arcs_.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const int node = edge_base + static_cast<int>(e);
    network_.add_arc(source_, node, 1);
    const Edge& edge = g.edge(e);
    const int to_low = network_.add_arc(node, vertex_base + edge.low, 1);
    const int to_high = network_.add_arc(node, vertex_base + edge.high, 1);
    edge_arcs_.emplace_back(to_low, to_high);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int arc = network_.add_arc(vertex_base + v, target_,
                                     v == g.sink() ? MaxFlow::kInfinite : 0);
    if (v != g.sink()) vertex_arc_[static_cast<std::size_t>(g.slot_of(v))] = arc;
  }
}

bool OrientationFlow::feasible(std::span<const int> grains) {
  for (std::size_t s = 0; s < vertex_arc_.size(); ++s) {
    network_.set_capacity(vertex_arc_[s], grains[s]);
  }
  const auto need = static_cast<MaxFlow::Capacity>(graph_->edge_count());
  return network_.solve(source_, target_, need) == need;
}

std::vector<Vertex> OrientationFlow::last_tails() const {
  std::vector<Vertex> tails;
  tails.reserve(edge_arcs_.size());
  for (std::size_t e = 0; e < edge_arcs_.size(); ++e) {
    const Edge& edge = graph_->edge(e);
    tails.push_back(network_.flow_on(edge_arcs_[e].first) > 0 ? edge.low : edge.high);
  }
  return tails;
}

bool hall_condition_check(const Graph& g, std::span<const int> grains) {
  constexpr int kMaxVertices = 20;
  if (g.vertex_count() > kMaxVertices) {
    throw Error(ErrorKind::kSizeCap, "Hall subset check is limited to " +
                                         std::to_string(kMaxVertices) + " vertices");
  }
  const std::size_t slots = g.non_sink_count();
  if (grains.size() != slots) {
    throw Error(ErrorKind::kUnstable, "configuration length does not match the graph");
  }
  for (std::size_t s = 0; s < slots; ++s) {
    if (grains[s] < 0 || grains[s] >= g.slot_degrees()[s]) {
      throw Error(ErrorKind::kUnstable, "configuration is not stable");
    }
  }
  // Adjacency among non-sink vertices as slot bitmasks.
  std::vector<std::uint32_t> adjacency(slots, 0);
  for (const Edge& e : g.edges()) {
    const int a = g.slot_of(e.low);
    const int b = g.slot_of(e.high);
    if (a < 0 || b < 0) continue;
    adjacency[static_cast<std::size_t>(a)] |= 1U << b;
    adjacency[static_cast<std::size_t>(b)] |= 1U << a;
  }
  const std::uint32_t subsets = 1U << slots;
  for (std::uint32_t set = 1; set < subsets; ++set) {
    long twice_internal = 0;
    long capacity = 0;
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(rest));
      twice_internal += std::popcount(adjacency[s] & set);
      capacity += grains[s];
    }
    if (twice_internal / 2 > capacity) return false;
  }
  return true;
}

}  // namespace lacuna
