#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lacuna/error.hpp"
#include "lacuna/graph.hpp"
#include "lacuna/numeric.hpp"
#include "lacuna/polynomial.hpp"
#include "lacuna/recurrence.hpp"

namespace lacuna {

enum class SequenceProperty { kLogConcave, kUnimodal };

struct Witness {
  std::size_t index = 0;  // the middle position k
  BigInt previous;        // a_{k-1}
  BigInt middle;          // a_k
  BigInt next;            // a_{k+1}
  // Log-concavity only: a_k == 0 with positive entries on both sides.
  bool internal_zero = false;
};

struct SequenceVerdict {
  SequenceProperty property = SequenceProperty::kLogConcave;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
};

// a_k^2 >= a_{k-1} a_{k+1} for every interior k, in exact arithmetic. An
// interior zero with positive entries somewhere on both sides is reported as
// a violation with internal_zero set. Throws Error(kPrecondition) on a
// negative entry.
SequenceVerdict is_log_concave(std::span<const BigInt> sequence);

// Weakly rises then weakly falls. The witness is the first rise after a fall.
SequenceVerdict is_unimodal(std::span<const BigInt> sequence);

std::vector<BigInt> partial_sums(std::span<const BigInt> sequence);

// z_k = sum_{i<=k} x_i y_{k-i}, length |x| + |y| - 1 (empty if either is).
std::vector<BigInt> convolve(std::span<const BigInt> x, std::span<const BigInt> y);

enum class SectorMembership { kInside, kOutside, kIndeterminate };

const char* to_string(SectorMembership membership) noexcept;

struct Root {
  std::complex<double> value;
  double residual = 0.0;  // |p(root)| / |leading coefficient|
  SectorMembership sector = SectorMembership::kIndeterminate;
};

struct RootReport {
  std::vector<Root> roots;
  int iterations = 0;
};

struct RootOptions {
  double tolerance = 1e-12;
  int max_iterations = 500;
};

// Thrown from roots() when the iteration cap is hit.
class RootConvergenceError : public Error {
 public:
  RootConvergenceError(const std::string& what, RootReport best)
      : Error(ErrorKind::kNoConvergence, what), best_(std::move(best)) {}
  const RootReport& best_iterate() const noexcept { return best_; }

 private:
  RootReport best_;
};

// All complex roots by Aberth-Ehrlich simultaneous iteration; sector fields
// are filled by sector_check. Requires degree >= 1.
RootReport roots(const LackingPolynomial& p, const RootOptions& options = {});

// Open region 2pi/3 < arg(z) < 4pi/3 with arg normalized to [0, 2pi).
// Within `band` of either boundary (or of the origin) the answer is
// indeterminate.
SectorMembership sector_membership(std::complex<double> z, double band = 1e-9);

struct SectorSummary {
  std::size_t inside = 0;
  std::size_t outside = 0;
  std::size_t indeterminate = 0;
  bool all_inside() const noexcept { return outside == 0 && indeterminate == 0; }
};

// Fills each root's sector field and returns the tally.
SectorSummary sector_check(RootReport& report, double band = 1e-9);

enum class Dominance { kBelow, kEqual, kAbove };

const char* to_string(Dominance d) noexcept;

struct BoundsReport {
  int m = 0;
  int n = 0;
  BigInt sto_count;
  BigInt stable_count;          // n^{m-1} m^n
  BigInt spanning_tree_count;   // n^{m-1} m^{n-1}
  bool lower_ok = false;
  bool upper_ok = false;
  Dominance dominates = Dominance::kBelow;  // sto_count vs stable_count / 2
};

BoundsReport bounds_report(BipartiteSpec spec, const BigInt& sto_count);

enum class CellStatus { kComputed, kBudgetExhausted };

struct ScanCell {
  int m = 0;
  int n = 0;
  CellStatus status = CellStatus::kComputed;
  LackingPolynomial polynomial;
  SequenceVerdict log_concave;
  SequenceVerdict unimodal;
  std::optional<BoundsReport> bounds;
  // Set for m == 2 or n == 2 cells: agreement with the closed form.
  std::optional<bool> closed_form_match;
  std::string note;

  bool violation() const noexcept;
};

struct ScanOptions {
  EngineOptions limits;  // max_work bounds orbits per cell
};

// Every cell 2 <= m, 2 <= n, m + n <= max_total, ordered by m then n.
// Empty when max_total < 4. Throws Error(kPrecondition) when max_total < 0.
std::vector<ScanCell> conjecture_scan(int max_total, const ScanOptions& options = {});

// m,n,degree,coeffs,log_concave,unimodal,sto_count,lower_bound,upper_bound,dominates
std::string scan_to_csv(const std::vector<ScanCell>& cells);

}  // namespace lacuna
