#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "lacuna/configuration.hpp"
#include "lacuna/graph.hpp"
#include "lacuna/numeric.hpp"

namespace lacuna {

// counts[l] = number of stochastically recurrent configurations with total
// lacking number l. Trailing zero levels are dropped.
struct LevelHistogram {
  std::vector<BigInt> counts;

  BigInt total() const;
  friend bool operator==(const LevelHistogram&, const LevelHistogram&) = default;
};

struct EngineOptions {
  unsigned threads = 1;
  // Refuse (Error kBudget) when the sweep would exceed this many
  // configurations (flow engine) or orbits (symmetric engine).
  std::uint64_t max_work = std::numeric_limits<std::uint64_t>::max();
  // Soft wall-clock cap, checked periodically during the sweep.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Mixed-radix sweep over all stable configurations, last slot fastest.
class StableSweep {
 public:
  explicit StableSweep(const Graph& g);

  // Advances to the next configuration; false once exhausted. The first call
  // yields the all-zero configuration.
  bool next();
  const Configuration& current() const noexcept { return current_; }

 private:
  std::vector<int> radices_;
  Configuration current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Configuration> enumerate_stable(const Graph& g);

// Sum over non-sink v of (degree(v) - grains - 1). Requires c stable.
int level(const Graph& g, const Configuration& c);
// Largest possible level: sum of (degree - 1) over non-sink vertices.
int max_level(const Graph& g);

// Flow-based membership test. Throws Error(kUnstable) for unstable c.
bool is_stochastically_recurrent(const Graph& g, const Configuration& c);

struct StoResult {
  LevelHistogram histogram;
  // Filled only when requested, in lexicographic order.
  std::vector<Configuration> members;
};

// Histogram over Sto(G) from the generic sweep with flow membership and
// monotone pruning of the last slot.
StoResult sto_fast(const Graph& g, const EngineOptions& options = {},
                   bool collect_members = false);

// Weakly decreasing value vector for one side of K_{m,n} together with its
// orbit size under permutations of that side's non-sink vertices.
struct SideMultiset {
  std::vector<int> values;  // weakly decreasing
  std::vector<unsigned> multiplicities;  // by distinct value, in order
};

// Every multiset of `count` values drawn from [0, radix).
std::vector<SideMultiset> side_multisets(int count, int radix);

// Same histogram as sto_fast(make_complete_bipartite(spec)) using one flow
// call per orbit of the sink-fixing automorphism group.
LevelHistogram sto_bipartite_symmetric(BipartiteSpec spec,
                                       const EngineOptions& options = {});

// Number of orbits sto_bipartite_symmetric would visit.
BigInt bipartite_orbit_count(BipartiteSpec spec);

}  // namespace lacuna
