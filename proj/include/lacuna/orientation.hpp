#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lacuna/configuration.hpp"
#include "lacuna/graph.hpp"

namespace lacuna {

// One direction bit per edge index: 0 means low -> high, 1 means high -> low.
class Orientation {
 public:
  explicit Orientation(std::size_t edge_count) : bits_(edge_count) {}
  explicit Orientation(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  // Bit i of `mask` becomes the direction of edge i.
  static Orientation from_mask(std::size_t edge_count, std::uint64_t mask);

  std::size_t width() const noexcept { return bits_.size(); }
  bool reversed(std::size_t edge) const { return bits_.test(edge); }
  void set(std::size_t edge, bool reversed) { bits_.set(edge, reversed); }
  void flip(std::size_t edge) { bits_.flip(edge); }
  Orientation complement() const { return Orientation(~bits_); }

  Vertex tail(const Graph& g, std::size_t edge) const;
  Vertex head(const Graph& g, std::size_t edge) const;

 private:
  boost::dynamic_bitset<> bits_;
};

// Per-vertex out-degree (all vertices, including the sink).
std::vector<int> out_degrees(const Graph& g, const Orientation& o);
std::vector<int> in_degrees(const Graph& g, const Orientation& o);

// in_O(v) >= degree(v) - c(v) for every non-sink v. Requires c stable.
bool is_compatible(const Graph& g, const Orientation& o, const Configuration& c);

// Stable configurations compatible with an orientation form the box
// lower[i] <= c[i] < upper[i]; lower is the out-degree, upper the degree.
// The box may be empty.
struct CompBox {
  std::vector<int> lower;
  std::vector<int> upper;

  bool empty() const noexcept;
  bool contains(const Configuration& c) const noexcept;
  std::uint64_t volume() const noexcept;

  friend bool operator==(const CompBox&, const CompBox&) = default;
};

CompBox comp_box(const Graph& g, const Orientation& o);

// Every member of the box, in lexicographic order.
std::vector<Configuration> box_members(const CompBox& box);

struct OracleOptions {
  std::size_t max_edges = 24;
  unsigned threads = 1;
};

// Sto(G) as the union of comp_box over all 2^|E| orientations, sorted
// lexicographically. Throws Error(kBudget) when |E| exceeds max_edges.
std::vector<Configuration> sto_by_union(const Graph& g,
                                        const OracleOptions& options = {});

}  // namespace lacuna
