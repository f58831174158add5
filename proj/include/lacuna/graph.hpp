#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lacuna {

using Vertex = int;

// An undirected edge. `low < high` always holds; orientation bit 0 means
// the edge is directed low -> high.
struct Edge {
  Vertex low;
  Vertex high;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BipartiteSpec {
  int m = 1;  // part containing the sink, vertices 0..m-1
  int n = 1;  // other part, vertices m..m+n-1
};

// Simple, connected, loop-free graph with a distinguished sink.
// Immutable after construction; edge indices never change.
class Graph {
 public:
  static Graph from_edge_list(int vertex_count,
                              const std::vector<std::pair<int, int>>& pairs,
                              Vertex sink);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  Vertex sink() const noexcept { return sink_; }

  int degree(Vertex v) const { return degrees_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  // Non-sink vertices in increasing order. A Configuration is indexed by
  // position in this list.
  const std::vector<Vertex>& non_sink_vertices() const noexcept {
    return non_sink_;
  }
  std::size_t non_sink_count() const noexcept { return non_sink_.size(); }
  // Position of v in non_sink_vertices(), or -1 for the sink.
  int slot_of(Vertex v) const { return slot_.at(static_cast<std::size_t>(v)); }

  // Degrees of non-sink vertices, in slot order.
  const std::vector<int>& slot_degrees() const noexcept { return slot_degree_; }

  // Incident edge indices of v.
  const std::vector<std::size_t>& incident(Vertex v) const {
    return incident_.at(static_cast<std::size_t>(v));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.sink_ == b.sink_ &&
           a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int vertex_count_ = 0;
  Vertex sink_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<Vertex> non_sink_;
  std::vector<int> slot_;
  std::vector<int> slot_degree_;
  std::vector<std::vector<std::size_t>> incident_;
};

// K_{m,n} with sink 0 and edges in row-major order over (first part, second part).
Graph make_complete_bipartite(BipartiteSpec spec);

int degree(const Graph& g, Vertex v);

// |E| - |V| + 1.
int cycle_rank(const Graph& g);

// "V E S" header followed by E lines "u v". Throws ParseError with the
// offending line number, or a validation Error for structurally bad graphs.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

}  // namespace lacuna
