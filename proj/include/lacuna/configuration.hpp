#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "lacuna/graph.hpp"

namespace lacuna {

// Grain counts on the non-sink vertices, indexed by Graph::slot_of.
struct Configuration {
  std::vector<int> grains;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

bool is_stable(const Graph& g, const Configuration& c);

// Throws Error(kUnstable) unless c has the right length and every grain
// count lies in [0, degree).
void require_stable(const Graph& g, const Configuration& c);

// Mixed-radix code of a stable configuration with per-slot radix = degree.
// The first slot is most significant, so codes sort lexicographically.
class MixedRadix {
 public:
  explicit MixedRadix(const Graph& g);

  std::uint64_t encode(std::span<const int> grains) const;
  void decode(std::uint64_t code, std::span<int> grains) const;
  // Product of the radices; the number of stable configurations.
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<int>& radices() const noexcept { return radices_; }

 private:
  std::vector<int> radices_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t size_ = 1;
};

// Saturating product of slot degrees; UINT64_MAX on overflow.
std::uint64_t stable_count(const Graph& g);

}  // namespace lacuna
