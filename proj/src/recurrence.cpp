#include "lacuna/recurrence.hpp"

#include <algorithm>
#include <numeric>

#include "lacuna/error.hpp"
#include "lacuna/flow.hpp"
#include "parallel.hpp"

namespace lacuna {

BigInt LevelHistogram::total() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

StableSweep::StableSweep(const Graph& g) : radices_(g.slot_degrees()) {
  current_.grains.assign(radices_.size(), 0);
}

bool StableSweep::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = radices_.size(); i-- > 0;) {
    if (++current_.grains[i] < radices_[i]) return true;
    current_.grains[i] = 0;
  }
  done_ = true;
  return false;
}

std::vector<Configuration> enumerate_stable(const Graph& g) {
  std::vector<Configuration> all;
  StableSweep sweep(g);
  while (sweep.next()) all.push_back(sweep.current());
  return all;
}

int level(const Graph& g, const Configuration& c) {
  require_stable(g, c);
  int total = 0;
  const auto& deg = g.slot_degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) total += deg[i] - c.grains[i] - 1;
  return total;
}

int max_level(const Graph& g) {
  int total = 0;
  for (int d : g.slot_degrees()) total += d - 1;
  return total;
}

bool is_stochastically_recurrent(const Graph& g, const Configuration& c) {
  require_stable(g, c);
  OrientationFlow flow(g);
  return flow.feasible(c.grains);
}

namespace {

void check_deadline(const EngineOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw Error(ErrorKind::kBudget, "wall-clock limit exceeded");
  }
}

void trim(std::vector<BigInt>& counts) {
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
}

LevelHistogram to_histogram(const std::vector<std::uint64_t>& counts) {
  LevelHistogram h;
  h.counts.reserve(counts.size());
  for (auto c : counts) h.counts.emplace_back(c);
  trim(h.counts);
  return h;
}

}  // namespace

StoResult sto_fast(const Graph& g, const EngineOptions& options, bool collect_members) {
  const std::size_t slots = g.non_sink_count();
  const std::size_t levels = static_cast<std::size_t>(max_level(g)) + 1;
  StoResult result;
  if (slots == 0) {
    result.histogram.counts = {1};
    if (collect_members) result.members.push_back(Configuration{});
    return result;
  }
  const std::uint64_t space = stable_count(g);
  if (space > options.max_work) {
    throw Error(ErrorKind::kBudget,
                "flow engine would visit " + std::to_string(space) +
                    " configurations (limit " + std::to_string(options.max_work) + ")");
  }

  const auto& deg = g.slot_degrees();
  const int last_radix = deg.back();
  const std::vector<int> head_radices(deg.begin(), deg.end() - 1);
  const std::uint64_t head_count = space / static_cast<std::uint64_t>(last_radix);

  struct Partial {
    std::vector<std::uint64_t> counts;
    std::vector<Configuration> members;
  };
  const unsigned workers = std::max(1U, options.threads);
  std::vector<Partial> partials(workers);

  detail::run_partitioned(workers, head_count, [&](unsigned w, std::size_t begin, std::size_t end) {
    Partial& part = partials[w];
    part.counts.assign(levels, 0);
    OrientationFlow flow(g);
    std::vector<int> grains(slots, 0);

    // Decode the first head code; later heads advance as a mixed-radix counter.
    {
      std::uint64_t code = begin;
      for (std::size_t i = head_radices.size(); i-- > 0;) {
        grains[i] = static_cast<int>(code % static_cast<std::uint64_t>(head_radices[i]));
        code /= static_cast<std::uint64_t>(head_radices[i]);
      }
    }
    int head_level = 0;
    for (std::size_t i = 0; i + 1 < slots; ++i) head_level += deg[i] - grains[i] - 1;

    for (std::size_t h = begin; h < end; ++h) {
      if (((h - begin) & 1023U) == 1023U) check_deadline(options);

      // Sto is an up-set, so the accepted last values form a suffix
      // [threshold, last_radix) of the row.
      grains.back() = last_radix - 1;
      if (flow.feasible(grains)) {
        int lo = 0;
        int hi = last_radix - 1;  // invariant: hi accepted
        while (lo < hi) {
          const int mid = lo + (hi - lo) / 2;
          grains.back() = mid;
          if (flow.feasible(grains)) {
            hi = mid;
          } else {
            lo = mid + 1;
          }
        }
        for (int x = hi; x < last_radix; ++x) {
          ++part.counts[static_cast<std::size_t>(head_level + last_radix - 1 - x)];
          if (collect_members) {
            grains.back() = x;
            part.members.push_back(Configuration{grains});
          }
        }
      }

      // Advance the head counter.
      for (std::size_t i = head_radices.size(); i-- > 0;) {
        if (++grains[i] < head_radices[i]) {
          --head_level;
          break;
        }
        head_level += head_radices[i] - 1;
        grains[i] = 0;
      }
    }
  });

  std::vector<std::uint64_t> merged(levels, 0);
  for (auto& part : partials) {
    for (std::size_t l = 0; l < part.counts.size(); ++l) merged[l] += part.counts[l];
    if (collect_members) {
      result.members.insert(result.members.end(),
                            std::make_move_iterator(part.members.begin()),
                            std::make_move_iterator(part.members.end()));
    }
  }
  result.histogram = to_histogram(merged);
  return result;
}

std::vector<SideMultiset> side_multisets(int count, int radix) {
  std::vector<SideMultiset> out;
  if (count < 0 || radix < 1) return out;
  std::vector<int> values(static_cast<std::size_t>(count), radix - 1);
  while (true) {
    SideMultiset ms;
    ms.values = values;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i == 0 || values[i] != values[i - 1]) {
        ms.multiplicities.push_back(1);
      } else {
        ++ms.multiplicities.back();
      }
    }
    out.push_back(std::move(ms));

    // Next weakly decreasing vector in reverse-lexicographic order: decrement
    // the rightmost positive entry and reset everything after it to that value.
    std::size_t i = values.size();
    while (i > 0 && values[i - 1] == 0) --i;
    if (i == 0) break;
    const int v = --values[i - 1];
    for (std::size_t j = i; j < values.size(); ++j) values[j] = v;
  }
  return out;
}

BigInt bipartite_orbit_count(BipartiteSpec spec) {
  auto multisets = [](int count, int radix) {
    // C(count + radix - 1, count)
    const auto row = binomial_row(static_cast<unsigned>(count + radix - 1));
    return row[static_cast<std::size_t>(count)];
  };
  return multisets(spec.m - 1, spec.n) * multisets(spec.n, spec.m);
}

LevelHistogram sto_bipartite_symmetric(BipartiteSpec spec, const EngineOptions& options) {
  const Graph g = make_complete_bipartite(spec);
  const int m = spec.m;
  const int n = spec.n;

  const BigInt orbits = bipartite_orbit_count(spec);
  if (orbits > options.max_work) {
    throw Error(ErrorKind::kBudget,
                "symmetric engine would visit " + orbits.str() +
                    " orbits (limit " + std::to_string(options.max_work) + ")");
  }

  // First part (without the sink): m-1 vertices of degree n.
  // Second part: n vertices of degree m.
  const auto first = side_multisets(m - 1, n);
  const auto second = side_multisets(n, m);

  auto weight_and_level = [](const std::vector<SideMultiset>& side, int radix) {
    std::vector<std::pair<BigInt, int>> out;
    out.reserve(side.size());
    for (const auto& ms : side) {
      int lvl = 0;
      for (int v : ms.values) lvl += radix - 1 - v;
      out.emplace_back(multinomial(ms.multiplicities), lvl);
    }
    return out;
  };
  const auto first_info = weight_and_level(first, n);
  const auto second_info = weight_and_level(second, m);

  const std::size_t levels = static_cast<std::size_t>(max_level(g)) + 1;
  const unsigned workers = std::max(1U, options.threads);
  std::vector<std::vector<BigInt>> partials(workers);

  detail::run_partitioned(workers, first.size(), [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& counts = partials[w];
    counts.assign(levels, 0);
    OrientationFlow flow(g);
    std::vector<int> grains(g.non_sink_count(), 0);
    // Per-level multiplicity sums of accepted second-side multisets.
    std::vector<BigInt> row(levels, 0);
    for (std::size_t a = begin; a < end; ++a) {
      check_deadline(options);
      std::copy(first[a].values.begin(), first[a].values.end(), grains.begin());
      std::fill(row.begin(), row.end(), 0);
      bool any = false;
      for (std::size_t b = 0; b < second.size(); ++b) {
        std::copy(second[b].values.begin(), second[b].values.end(),
                  grains.begin() + (m - 1));
        if (!flow.feasible(grains)) continue;
        row[static_cast<std::size_t>(second_info[b].second)] += second_info[b].first;
        any = true;
      }
      if (!any) continue;
      const auto& [weight, lvl] = first_info[a];
      for (std::size_t l = 0; l + static_cast<std::size_t>(lvl) < levels; ++l) {
        if (row[l] != 0) counts[l + static_cast<std::size_t>(lvl)] += weight * row[l];
      }
    }
  });

  LevelHistogram h;
  h.counts.assign(levels, 0);
  for (const auto& part : partials) {
    for (std::size_t l = 0; l < part.size(); ++l) h.counts[l] += part[l];
  }
  trim(h.counts);
  return h;
}

}  // namespace lacuna
