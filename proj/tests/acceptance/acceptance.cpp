// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../oracles.hpp"
#include "lacuna/analysis.hpp"
#include "lacuna/flow.hpp"
#include "lacuna/orientation.hpp"
#include "lacuna/polynomial.hpp"
#include "lacuna/recurrence.hpp"

using namespace lacuna;
using namespace lacuna::testing;

namespace {

constexpr double kGoldenSeconds = 60.0;
constexpr double kClosedFormSeconds = 120.0;
constexpr double kScanSeconds = 300.0;
constexpr double kL66Seconds = 600.0;
constexpr double kRootTolerance = 1e-8;
constexpr int kRandomGraphs = 250;
constexpr int kRandomSequences = 1000;

unsigned worker_count() {
  if (const char* env = std::getenv("LACUNA_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return static_cast<unsigned>(t);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Failures report through this; the message ends up on the FAIL line.
struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

std::string label(int m, int n) {
  return "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PolynomialOptions with_engine(Engine engine) {
  PolynomialOptions o;
  o.engine = engine;
  o.limits.threads = worker_count();
  o.oracle_max_edges = 24;
  return o;
}

LackingPolynomial via_oracle_union(const Graph& g) {
  OracleOptions o;
  o.threads = worker_count();
  const auto members = sto_by_union(g, o);
  std::vector<BigInt> coeffs;
  for (const auto& c : members) {
    const auto l = static_cast<std::size_t>(level(g, c));
    if (coeffs.size() <= l) coeffs.resize(l + 1, 0);
    coeffs[l] += 1;
  }
  return LackingPolynomial(std::move(coeffs));
}

// Kirchhoff: determinant of the Laplacian with the sink row and column removed.
BigInt spanning_trees(const Graph& g) {
  const auto slots = g.non_sink_vertices();
  const std::size_t k = slots.size();
  std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(k, 0));
  for (std::size_t i = 0; i < k; ++i) a[i][i] = g.degree(slots[i]);
  for (const Edge& e : g.edges()) {
    const int x = g.slot_of(e.low);
    const int y = g.slot_of(e.high);
    if (x >= 0 && y >= 0) {
      a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] -= 1;
      a[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] -= 1;
    }
  }
  BigRational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && a[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c] == 0) continue;
      const BigRational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  expect(boost::multiprecision::denominator(det) == 1, "non-integral determinant");
  return boost::multiprecision::numerator(det);
}

// ---- criteria ------------------------------------------------------------

std::string golden_polynomials() {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& row : golden_table()) {
    const Graph g = make_complete_bipartite({row.m, row.n});
    const LackingPolynomial expected(to_big(row.coeffs));
    const auto flow = lacking_polynomial(g, with_engine(Engine::kFlow));
    expect(flow == expected, "flow engine " + label(row.m, row.n) + ": " + flow.to_text());
    const auto oracle = via_oracle_union(g);
    expect(oracle == expected, "orientation union " + label(row.m, row.n) + ": " + oracle.to_text());
  }
  const double elapsed = seconds_since(start);
  expect(elapsed < kGoldenSeconds, "took " + std::to_string(elapsed) + " s");
  return "13 polynomials exact via flow and orientation union";
}

std::string example() {
  const Graph g = make_complete_bipartite({2, 2});
  const std::vector<Configuration> expected{{{0, 1, 1}}, {{1, 0, 1}}, {{1, 1, 0}}, {{1, 1, 1}}};
  expect(sto_by_union(g) == expected, "Sto(K_{2,2}) differs");
  const std::vector<std::vector<Configuration>> contributions{
      {{{1, 1, 1}}},
      {{{1, 1, 1}}},
      {{{1, 0, 1}}, {{1, 1, 1}}},
      {{{1, 1, 0}}, {{1, 1, 1}}},
      {{{0, 1, 1}}, {{1, 1, 1}}},
  };
  const auto rows = drawn_k22_orientations(g);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    expect(box_members(comp_box(g, rows[r])) == contributions[r],
           "comp box of drawn orientation " + std::to_string(r + 1));
  }
  return "4 states and 5 comp-box rows";
}

std::string closed_forms() {
  const auto start = std::chrono::steady_clock::now();
  for (int k = 1; k <= 10; ++k) {
    const auto a = lacking_polynomial(make_complete_bipartite({2, k}), with_engine(Engine::kFlow));
    expect(closed_form_2n(k) == a, "K_{2,n} closed form at n=" + std::to_string(k));
    const auto b = lacking_polynomial(make_complete_bipartite({k, 2}), with_engine(Engine::kFlow));
    expect(closed_form_m2(k) == b, "K_{m,2} closed form at m=" + std::to_string(k));
  }
  const double elapsed = seconds_since(start);
  expect(elapsed < kClosedFormSeconds, "took " + std::to_string(elapsed) + " s");
  return "20 cells exact";
}

std::string counting() {
  for (int n = 1; n <= 20; ++n) {
    const BigInt expected = BigInt(n) << (n - 1);
    expect(evaluate(closed_form_2n(n), BigInt(1)) == expected,
           "L_{2," + std::to_string(n) + "}(1)");
  }
  for (int n = 1; n <= 10; ++n) {
    const auto p = lacking_polynomial(make_complete_bipartite({2, n}), with_engine(Engine::kFlow));
    expect(evaluate(p, BigInt(1)) == (BigInt(n) << (n - 1)), "engine L_{2," + std::to_string(n) + "}(1)");
  }
  int cells = 0;
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; m + n <= 10; ++n) {
      const Graph g = make_complete_bipartite({m, n});
      const auto p = lacking_polynomial(BipartiteSpec{m, n}, with_engine(Engine::kSymmetric));
      const auto report = bounds_report({m, n}, evaluate(p, BigInt(1)));
      expect(report.lower_ok && report.upper_ok, "bound fails at " + label(m, n));
      expect(report.spanning_tree_count == spanning_trees(g), "tree count formula at " + label(m, n));
      ++cells;
    }
  }
  return "n 2^(n-1) for n <= 20; bounds and tree formula on " + std::to_string(cells) + " cells";
}

std::string scan() {
  const auto start = std::chrono::steady_clock::now();
  ScanOptions o;
  o.limits.threads = worker_count();
  const auto cells = conjecture_scan(8, o);
  expect(cells.size() == 15, std::to_string(cells.size()) + " cells");
  for (const auto& c : cells) {
    expect(c.status == CellStatus::kComputed, "budget at " + label(c.m, c.n));
    expect(c.log_concave.holds && c.unimodal.holds, "log-concavity or unimodality fails at " + label(c.m, c.n));
    expect(!c.violation(), "violation at " + label(c.m, c.n));
  }
  const double elapsed = seconds_since(start);
  expect(elapsed < kScanSeconds, "took " + std::to_string(elapsed) + " s");
  return "15 cells log-concave and unimodal";
}

std::string root_counterexample() {
  const LackingPolynomial p(big({1, 5, 11, 15}));
  auto report = roots(p);
  expect(report.roots.size() == 3, "root count");
  const std::complex<double> expected[] = {{-1.0 / 3.0, 0.0}, {-0.2, -0.4}, {-0.2, 0.4}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = report.roots[i];
    expect(r.residual < kRootTolerance, "residual of root " + std::to_string(i));
    expect(std::abs(r.value.real() - expected[i].real()) < kRootTolerance &&
               std::abs(r.value.imag() - expected[i].imag()) < kRootTolerance,
           "root " + std::to_string(i) + " position");
  }
  const auto summary = sector_check(report);
  expect(summary.outside == 2 && summary.inside == 1 && summary.indeterminate == 0, "sector counts");
  expect(report.roots[0].sector == SectorMembership::kInside, "real root sector");
  expect(report.roots[1].sector == SectorMembership::kOutside &&
             report.roots[2].sector == SectorMembership::kOutside,
         "complex root sector");
  return "roots within 1e-8, complex pair outside the sector";
}

std::size_t deciders_agree(const Graph& g) {
  const auto members = sto_by_union(g);
  const std::set<Configuration> in_union(members.begin(), members.end());
  std::size_t checked = 0;
  for (const Configuration& c : enumerate_stable(g)) {
    const bool by_union = in_union.contains(c);
    const bool by_flow = is_stochastically_recurrent(g, c);
    const bool by_hall = hall_condition_check(g, c.grains);
    if (by_union != by_flow || by_flow != by_hall) {
      std::ostringstream os;
      os << "disagreement on " << to_edge_list(g) << " at (";
      for (std::size_t i = 0; i < c.grains.size(); ++i) os << (i ? "," : "") << c.grains[i];
      os << ")";
      throw Failed{os.str()};
    }
    ++checked;
  }
  return checked;
}

std::string oracle_equivalence() {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<int> vertices(2, 8);
  std::size_t configs = 0;
  for (int i = 0; i < kRandomGraphs; ++i) {
    const Graph g = random_connected_graph(rng, vertices(rng), 12);
    expect(g.edge_count() <= 12, "generator exceeded 12 edges");
    configs += deciders_agree(g);
  }
  int bipartite = 0;
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; m * n <= 12; ++n) {
      configs += deciders_agree(make_complete_bipartite({m, n}));
      ++bipartite;
    }
  }
  return std::to_string(kRandomGraphs) + " random graphs + " + std::to_string(bipartite) +
         " K_{m,n}; " + std::to_string(configs) + " configurations";
}

// Random log-concave sequences: either grown one term at a time under the
// bound a_{k+1} <= a_k^2 / a_{k-1}, or the coefficients of a real-rooted
// product; sometimes padded with zeros at the ends.
std::vector<BigInt> random_log_concave(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(1, 10);
  std::uniform_int_distribution<int> kind(0, 1);
  std::vector<BigInt> a;
  const int len = length(rng);
  if (kind(rng) == 0) {
    std::uniform_int_distribution<long long> first(1, 1000);
    a.push_back(first(rng));
    for (int k = 1; k < len; ++k) {
      BigInt cap = k == 1 ? BigInt(5000) : BigInt(a[k - 1] * a[k - 1] / a[k - 2]);
      if (cap < 1) break;
      if (cap > BigInt(1000000000000LL)) cap = BigInt(1000000000000LL);
      std::uniform_int_distribution<long long> next(1, static_cast<long long>(cap));
      a.push_back(next(rng));
    }
  } else {
    std::uniform_int_distribution<int> root(1, 9);
    a = {1};
    for (int k = 1; k < len; ++k) a = convolve(a, std::vector<BigInt>{1, root(rng)});
  }
  std::uniform_int_distribution<int> pad(0, 3);
  if (pad(rng) == 0) a.insert(a.begin(), 0);
  if (pad(rng) == 0) a.push_back(0);
  return a;
}

std::string closure_properties() {
  std::mt19937_64 rng(777);
  std::vector<std::vector<BigInt>> seqs;
  for (int i = 0; i < kRandomSequences; ++i) {
    seqs.push_back(random_log_concave(rng));
    expect(is_log_concave(seqs.back()).holds, "generator produced a non-log-concave sequence");
  }
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto& a = seqs[i];
    const auto sums = partial_sums(a);
    expect(is_log_concave(sums).holds, "partial sums of sequence " + std::to_string(i));
    const auto& b = seqs[(i + 1) % seqs.size()];
    expect(is_log_concave(convolve(a, b)).holds, "convolution " + std::to_string(i));
    const std::vector<BigInt> ones(a.size(), 1);
    const auto with_ones = convolve(a, ones);
    expect(std::equal(sums.begin(), sums.end(), with_ones.begin()),
           "ones convolution differs from partial sums at " + std::to_string(i));
  }
  return std::to_string(kRandomSequences) + " sequences, partial sums and convolutions";
}

std::string symmetry_engine() {
  EngineOptions o;
  o.threads = worker_count();
  int cells = 0;
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; m + n <= 8; ++n) {
      const auto fast = sto_fast(make_complete_bipartite({m, n}), o).histogram;
      const auto sym = sto_bipartite_symmetric({m, n}, o);
      expect(fast == sym, "histograms differ at " + label(m, n));
      ++cells;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const auto l66 = from_histogram(sto_bipartite_symmetric({6, 6}, o));
  const double elapsed = seconds_since(start);
  expect(elapsed < kL66Seconds, "L_{6,6} took " + std::to_string(elapsed) + " s");
  expect(is_log_concave(l66.coefficients()).holds, "L_{6,6} not log-concave");
  const auto report = bounds_report({6, 6}, evaluate(l66, BigInt(1)));
  expect(report.lower_ok && report.upper_ok, "L_{6,6} violates the bounds");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.1f", elapsed);
  return std::to_string(cells) + " cells agree; L_{6,6}(1) = " + to_decimal(report.sto_count) +
         " in " + timing + " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"golden polynomial table", golden_polynomials},
      {"K_{2,2} example", example},
      {"closed-form equivalence", closed_forms},
      {"counting identities", counting},
      {"conjecture scan to m+n=8", scan},
      {"L_{2,4} root counterexample", root_counterexample},
      {"membership decider equivalence", oracle_equivalence},
      {"log-concavity closure", closure_properties},
      {"symmetric engine", symmetry_engine},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = criteria[i].second();
      ok = true;
    } catch (const Failed& f) {
      detail = f.why;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += ok ? 0 : 1;
    std::printf("[%s] criterion %zu: %s -- %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures == 0 ? 0 : 1;
}
