#include "lacuna/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace lacuna {

SequenceVerdict is_log_concave(std::span<const BigInt> sequence) {
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < 0) {
      throw Error(ErrorKind::kPrecondition,
                  "log-concavity needs nonnegative entries; entry " + std::to_string(i) +
                      " is " + sequence[i].str());
    }
  }
  SequenceVerdict verdict;
  verdict.property = SequenceProperty::kLogConcave;
  const std::size_t size = sequence.size();
  if (size < 3) return verdict;

  std::vector<char> positive_before(size, 0);
  std::vector<char> positive_after(size, 0);
  for (std::size_t i = 1; i < size; ++i) {
    positive_before[i] = static_cast<char>(positive_before[i - 1] || sequence[i - 1] > 0);
  }
  for (std::size_t i = size - 1; i-- > 0;) {
    positive_after[i] = static_cast<char>(positive_after[i + 1] || sequence[i + 1] > 0);
  }

  for (std::size_t k = 1; k + 1 < size; ++k) {
    const bool internal_zero = sequence[k] == 0 && positive_before[k] && positive_after[k];
    if (internal_zero || sequence[k] * sequence[k] < sequence[k - 1] * sequence[k + 1]) {
      verdict.holds = false;
      verdict.witness = Witness{k, sequence[k - 1], sequence[k], sequence[k + 1], internal_zero};
      return verdict;
    }
  }
  return verdict;
}

SequenceVerdict is_unimodal(std::span<const BigInt> sequence) {
  SequenceVerdict verdict;
  verdict.property = SequenceProperty::kUnimodal;
  bool falling = false;
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    if (sequence[k] < sequence[k - 1]) {
      falling = true;
    } else if (falling && sequence[k] > sequence[k - 1]) {
      verdict.holds = false;
      verdict.witness = Witness{k - 1, k >= 2 ? sequence[k - 2] : BigInt(0),
                                sequence[k - 1], sequence[k], false};
      return verdict;
    }
  }
  return verdict;
}

std::vector<BigInt> partial_sums(std::span<const BigInt> sequence) {
  std::vector<BigInt> out;
  out.reserve(sequence.size());
  BigInt running = 0;
  for (const auto& x : sequence) {
    running += x;
    out.push_back(running);
  }
  return out;
}

std::vector<BigInt> convolve(std::span<const BigInt> x, std::span<const BigInt> y) {
  if (x.empty() || y.empty()) return {};
  std::vector<BigInt> z(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
  }
  return z;
}

const char* to_string(SectorMembership membership) noexcept {
  switch (membership) {
    case SectorMembership::kInside: return "inside";
    case SectorMembership::kOutside: return "outside";
    case SectorMembership::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

namespace {

using Complex = std::complex<double>;

// Horner evaluation of p and p', plus the running bound sum |a_k| |z|^k
// used for the roundoff stopping test.
struct HornerResult {
  Complex value;
  Complex derivative;
  double magnitude_bound;
};

HornerResult horner(const std::vector<double>& a, Complex z) {
  Complex p = a.back();
  Complex dp = 0.0;
  double bound = std::abs(a.back());
  const double r = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    bound = bound * r + std::abs(a[k]);
  }
  return {p, dp, bound};
}

}  // namespace

RootReport roots(const LackingPolynomial& p, const RootOptions& options) {
  const int degree = p.degree();
  if (degree < 1) {
    throw Error(ErrorKind::kPrecondition, "root finding needs a polynomial of degree >= 1");
  }
  std::vector<double> a;
  a.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    const double v = c.convert_to<double>();
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kPrecondition, "coefficient does not fit in a double");
    }
    a.push_back(v);
  }
  const double lead = std::abs(a.back());
  const auto deg = static_cast<std::size_t>(degree);

  // Starting points on a circle whose radius is the geometric mean of the
  // root moduli (or 1 when the constant term vanishes), rotated off the axes.
  double radius = a.front() != 0.0 ? std::pow(std::abs(a.front()) / lead, 1.0 / degree) : 1.0;
  std::vector<Complex> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / degree + 0.4;
    z[k] = std::polar(radius, angle);
  }

  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<char> settled(deg, 0);
  RootReport report;
  bool converged = false;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    report.iterations = iter;
    double max_update = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      if (settled[i]) continue;
      const HornerResult h = horner(a, z[i]);
      if (std::abs(h.value) <= 4.0 * kEps * h.magnitude_bound) {
        settled[i] = 1;
        continue;
      }
      const Complex ratio = h.value / h.derivative;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      max_update = std::max(max_update, std::abs(step));
    }
    if (max_update < options.tolerance ||
        std::all_of(settled.begin(), settled.end(), [](char s) { return s != 0; })) {
      converged = true;
      break;
    }
  }

  std::sort(z.begin(), z.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  for (const Complex& root : z) {
    report.roots.push_back(Root{root, std::abs(horner(a, root).value) / lead,
                                SectorMembership::kIndeterminate});
  }
  sector_check(report);
  if (!converged) {
    throw RootConvergenceError("root iteration did not converge in " +
                                   std::to_string(options.max_iterations) + " iterations",
                               report);
  }
  return report;
}

SectorMembership sector_membership(std::complex<double> z, double band) {
  if (std::abs(z) < band) return SectorMembership::kIndeterminate;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double arg = std::arg(z);  // (-pi, pi]
  if (arg < 0.0) arg += kTwoPi;
  const double lower = kTwoPi / 3.0;
  const double upper = 2.0 * kTwoPi / 3.0;
  if (std::abs(arg - lower) < band || std::abs(arg - upper) < band) {
    return SectorMembership::kIndeterminate;
  }
  return arg > lower && arg < upper ? SectorMembership::kInside : SectorMembership::kOutside;
}

SectorSummary sector_check(RootReport& report, double band) {
  SectorSummary summary;
  for (auto& root : report.roots) {
    root.sector = sector_membership(root.value, band);
    switch (root.sector) {
      case SectorMembership::kInside: ++summary.inside; break;
      case SectorMembership::kOutside: ++summary.outside; break;
      case SectorMembership::kIndeterminate: ++summary.indeterminate; break;
    }
  }
  return summary;
}

const char* to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::kBelow: return "below";
    case Dominance::kEqual: return "equal";
    case Dominance::kAbove: return "above";
  }
  return "unknown";
}

BoundsReport bounds_report(BipartiteSpec spec, const BigInt& sto_count) {
  if (spec.m < 1 || spec.n < 1) {
    throw Error(ErrorKind::kInvalidSpec, "bounds need m, n >= 1");
  }
  BoundsReport r;
  r.m = spec.m;
  r.n = spec.n;
  r.sto_count = sto_count;
  const auto m = static_cast<std::uint64_t>(spec.m);
  const auto n = static_cast<std::uint64_t>(spec.n);
  const BigInt common = power(n, static_cast<unsigned>(spec.m - 1));
  r.spanning_tree_count = common * power(m, static_cast<unsigned>(spec.n - 1));
  r.stable_count = common * power(m, static_cast<unsigned>(spec.n));
  r.lower_ok = r.spanning_tree_count <= sto_count;
  r.upper_ok = sto_count <= r.stable_count;
  const BigInt twice = 2 * sto_count;
  r.dominates = twice < r.stable_count   ? Dominance::kBelow
                : twice == r.stable_count ? Dominance::kEqual
                                          : Dominance::kAbove;
  return r;
}

bool ScanCell::violation() const noexcept {
  if (status != CellStatus::kComputed) return false;
  if (!log_concave.holds || !unimodal.holds) return true;
  if (closed_form_match && !*closed_form_match) return true;
  if (bounds && !(bounds->lower_ok && bounds->upper_ok)) return true;
  return false;
}

std::vector<ScanCell> conjecture_scan(int max_total, const ScanOptions& options) {
  if (max_total < 0) {
    throw Error(ErrorKind::kPrecondition, "max_total must be nonnegative");
  }
  std::vector<ScanCell> cells;
  for (int m = 2; m + 2 <= max_total; ++m) {
    for (int n = 2; m + n <= max_total; ++n) {
      ScanCell cell;
      cell.m = m;
      cell.n = n;
      try {
        cell.polynomial = from_histogram(sto_bipartite_symmetric({m, n}, options.limits));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kBudget) throw;
        cell.status = CellStatus::kBudgetExhausted;
        cell.note = e.what();
        cells.push_back(std::move(cell));
        continue;
      }
      const auto& coeffs = cell.polynomial.coefficients();
      cell.log_concave = is_log_concave(coeffs);
      cell.unimodal = is_unimodal(coeffs);
      cell.bounds = bounds_report({m, n}, evaluate(cell.polynomial, BigInt(1)));
      if (m == 2) cell.closed_form_match = closed_form_2n(n) == cell.polynomial;
      if (n == 2) {
        const bool match = closed_form_m2(m) == cell.polynomial;
        cell.closed_form_match = cell.closed_form_match.value_or(true) && match;
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

namespace {

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_coefficients(const LackingPolynomial& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k) out += ",";
    out += "\"" + p.coefficients()[k].str() + "\"";
  }
  return out + "]";
}

}  // namespace

std::string scan_to_csv(const std::vector<ScanCell>& cells) {
  std::ostringstream out;
  out << "m,n,degree,coeffs,log_concave,unimodal,sto_count,lower_bound,upper_bound,dominates\n";
  for (const auto& cell : cells) {
    out << cell.m << ',' << cell.n << ',';
    if (cell.status == CellStatus::kBudgetExhausted) {
      out << ",,budget-exhausted,budget-exhausted,,,,\n";
      continue;
    }
    out << cell.polynomial.degree() << ',' << csv_quote(json_coefficients(cell.polynomial))
        << ',' << (cell.log_concave.holds ? "true" : "false") << ','
        << (cell.unimodal.holds ? "true" : "false") << ',' << cell.bounds->sto_count << ','
        << cell.bounds->spanning_tree_count << ',' << cell.bounds->stable_count << ','
        << to_string(cell.bounds->dominates) << '\n';
  }
  return out.str();
}

}  // namespace lacuna
