#include "lacuna/orientation.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

#include "lacuna/error.hpp"

namespace lacuna {

Orientation Orientation::from_mask(std::size_t edge_count, std::uint64_t mask) {
  Orientation o(edge_count);
  for (std::size_t e = 0; e < edge_count && e < 64; ++e) {
    o.set(e, ((mask >> e) & 1U) != 0);
  }
  return o;
}

Vertex Orientation::tail(const Graph& g, std::size_t edge) const {
  const Edge& e = g.edge(edge);
  return reversed(edge) ? e.high : e.low;
}

Vertex Orientation::head(const Graph& g, std::size_t edge) const {
  const Edge& e = g.edge(edge);
  return reversed(edge) ? e.low : e.high;
}

namespace {

void require_width(const Graph& g, const Orientation& o) {
  if (o.width() != g.edge_count()) {
    throw Error(ErrorKind::kPrecondition,
                "orientation has " + std::to_string(o.width()) +
                    " bits for a graph with " + std::to_string(g.edge_count()) +
                    " edges");
  }
}

}  // namespace

std::vector<int> out_degrees(const Graph& g, const Orientation& o) {
  require_width(g, o);
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++out[static_cast<std::size_t>(o.tail(g, e))];
  }
  return out;
}

std::vector<int> in_degrees(const Graph& g, const Orientation& o) {
  require_width(g, o);
  std::vector<int> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ++in[static_cast<std::size_t>(o.head(g, e))];
  }
  return in;
}

bool is_compatible(const Graph& g, const Orientation& o, const Configuration& c) {
  require_stable(g, c);
  const auto in = in_degrees(g, o);
  for (std::size_t slot = 0; slot < g.non_sink_count(); ++slot) {
    const Vertex v = g.non_sink_vertices()[slot];
    if (in[static_cast<std::size_t>(v)] < g.degree(v) - c.grains[slot]) return false;
  }
  return true;
}

bool CompBox::empty() const noexcept {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] >= upper[i]) return true;
  }
  return false;
}

bool CompBox::contains(const Configuration& c) const noexcept {
  if (c.grains.size() != lower.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (c.grains[i] < lower[i] || c.grains[i] >= upper[i]) return false;
  }
  return true;
}

std::uint64_t CompBox::volume() const noexcept {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] >= upper[i]) return 0;
    v *= static_cast<std::uint64_t>(upper[i] - lower[i]);
  }
  return v;
}

CompBox comp_box(const Graph& g, const Orientation& o) {
  const auto out = out_degrees(g, o);
  CompBox box;
  box.lower.reserve(g.non_sink_count());
  box.upper = g.slot_degrees();
  for (Vertex v : g.non_sink_vertices()) {
    box.lower.push_back(out[static_cast<std::size_t>(v)]);
  }
  return box;
}

namespace {

// Calls fn(grains) for every point of [lower, upper), last slot fastest.
template <typename Fn>
void for_each_in_box(const std::vector<int>& lower, const std::vector<int>& upper,
                     Fn&& fn) {
  const std::size_t k = lower.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (lower[i] >= upper[i]) return;
  }
  std::vector<int> point = lower;
  while (true) {
    fn(point);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++point[i] < upper[i]) break;
      point[i] = lower[i];
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

std::vector<Configuration> box_members(const CompBox& box) {
  std::vector<Configuration> members;
  for_each_in_box(box.lower, box.upper, [&](const std::vector<int>& p) {
    members.push_back(Configuration{p});
  });
  return members;
}

namespace {

struct OracleSweep {
  const Graph& graph;
  const MixedRadix& radix;
  std::vector<std::uint64_t> slot_weight;

  // Marks every configuration of comp(O) for Gray-code orientations
  // gray(begin) .. gray(end - 1).
  void run(std::uint64_t begin, std::uint64_t end, std::vector<bool>& marked) const {
    const std::size_t edge_count = graph.edge_count();
    const auto& deg = graph.slot_degrees();
    const std::size_t slots = graph.non_sink_count();

    std::vector<int> out(static_cast<std::size_t>(graph.vertex_count()), 0);
    const std::uint64_t start = begin ^ (begin >> 1);
    std::vector<char> reversed(edge_count, 0);
    for (std::size_t e = 0; e < edge_count; ++e) {
      reversed[e] = static_cast<char>((start >> e) & 1U);
      const Edge& edge = graph.edge(e);
      ++out[static_cast<std::size_t>(reversed[e] ? edge.high : edge.low)];
    }

    // Slots whose out-degree reaches the degree empty the box.
    int blocked = 0;
    std::uint64_t lower_code = 0;
    for (std::size_t s = 0; s < slots; ++s) {
      const int o = out[static_cast<std::size_t>(graph.non_sink_vertices()[s])];
      if (o >= deg[s]) ++blocked;
      lower_code += static_cast<std::uint64_t>(std::min(o, deg[s] - 1)) * slot_weight[s];
    }

    auto adjust = [&](Vertex v, int delta) {
      const int s = graph.slot_of(v);
      const int before = out[static_cast<std::size_t>(v)];
      const int after = before + delta;
      out[static_cast<std::size_t>(v)] = after;
      if (s < 0) return;
      const auto su = static_cast<std::size_t>(s);
      const int d = deg[su];
      blocked += static_cast<int>(after >= d) - static_cast<int>(before >= d);
      const int clamped_before = std::min(before, d - 1);
      const int clamped_after = std::min(after, d - 1);
      lower_code += static_cast<std::uint64_t>(clamped_after) * slot_weight[su];
      lower_code -= static_cast<std::uint64_t>(clamped_before) * slot_weight[su];
    };

    std::unordered_set<std::uint64_t> seen_lower;
    std::vector<int> lower(slots);
    for (std::uint64_t t = begin;; ++t) {
      if (blocked == 0 && seen_lower.insert(lower_code).second) {
        for (std::size_t s = 0; s < slots; ++s) {
          lower[s] = out[static_cast<std::size_t>(graph.non_sink_vertices()[s])];
        }
        for_each_in_box(lower, deg, [&](const std::vector<int>& p) {
          marked[radix.encode(p)] = true;
        });
      }
      if (t + 1 >= end) break;
      const auto e = static_cast<std::size_t>(std::countr_zero(t + 1));
      const Edge& edge = graph.edge(e);
      const Vertex old_tail = reversed[e] ? edge.high : edge.low;
      const Vertex new_tail = reversed[e] ? edge.low : edge.high;
      reversed[e] = static_cast<char>(!reversed[e]);
      adjust(old_tail, -1);
      adjust(new_tail, +1);
    }
  }
};

}  // namespace

std::vector<Configuration> sto_by_union(const Graph& g, const OracleOptions& options) {
  const std::size_t edge_count = g.edge_count();
  if (edge_count > options.max_edges || edge_count > 40) {
    throw Error(ErrorKind::kBudget,
                "orientation oracle refuses " + std::to_string(edge_count) +
                    " edges (cap " + std::to_string(options.max_edges) + ", 2^|E| sweep)");
  }
  const MixedRadix radix(g);
  OracleSweep sweep{g, radix, {}};
  sweep.slot_weight.assign(g.non_sink_count(), 0);
  for (std::size_t s = 0; s < g.non_sink_count(); ++s) {
    std::vector<int> unit(g.non_sink_count(), 0);
    unit[s] = 1;
    sweep.slot_weight[s] = radix.encode(unit);
  }

  const std::uint64_t total = std::uint64_t{1} << edge_count;
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(1, total / 4096)));

  std::vector<std::vector<bool>> marks(workers, std::vector<bool>(radix.size(), false));
  if (workers == 1) {
    sweep.run(0, total, marks[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * w;
      const std::uint64_t end = w + 1 == workers ? total : begin + chunk;
      pool.emplace_back([&, w, begin, end] { sweep.run(begin, end, marks[w]); });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<Configuration> result;
  std::vector<int> grains(g.non_sink_count());
  for (std::uint64_t code = 0; code < radix.size(); ++code) {
    bool hit = false;
    for (const auto& m : marks) hit = hit || m[code];
    if (!hit) continue;
    radix.decode(code, grains);
    result.push_back(Configuration{grains});
  }
  return result;
}

}  // namespace lacuna
