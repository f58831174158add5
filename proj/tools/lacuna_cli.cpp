// Command-line front end. Talks to the library only through the C API.

#include <lacuna/lacuna.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Thrown for failures that should end the process with a specific code.
struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(lacuna_status status) {
  switch (status) {
    case LACUNA_OK: return kExitOk;
    case LACUNA_ERR_BUDGET:
    case LACUNA_ERR_SIZE_CAP: return kExitBudget;
    case LACUNA_ERR_INTERNAL:
    case LACUNA_ERR_NO_CONVERGENCE: return kExitViolation;
    default: return kExitUsage;
  }
}

void check(lacuna_status status) {
  if (status == LACUNA_OK) return;
  std::string message = lacuna_last_error();
  if (message.empty()) message = lacuna_status_string(status);
  if (status == LACUNA_ERR_BUDGET && message.find("count mode") == std::string::npos) {
    message += " (refused; no partial result emitted)";
  }
  throw CliFailure{exit_code_for(status), message};
}

// RAII wrappers over the C handles.
struct GraphDeleter {
  void operator()(lacuna_graph* g) const { lacuna_graph_free(g); }
};
struct PolyDeleter {
  void operator()(lacuna_poly* p) const { lacuna_poly_free(p); }
};
struct RootsDeleter {
  void operator()(lacuna_roots* r) const { lacuna_roots_free(r); }
};
struct ScanDeleter {
  void operator()(lacuna_scan* s) const { lacuna_scan_free(s); }
};
using GraphHandle = std::unique_ptr<lacuna_graph, GraphDeleter>;
using PolyHandle = std::unique_ptr<lacuna_poly, PolyDeleter>;
using RootsHandle = std::unique_ptr<lacuna_roots, RootsDeleter>;
using ScanHandle = std::unique_ptr<lacuna_scan, ScanDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  lacuna_string_free(s);
  return out;
}

struct Budgets {
  unsigned threads = 0;
  std::string engine = "auto";
  std::string format = "text";
  std::string output;
  std::uint64_t max_oracle_edges = 24;
  std::uint64_t max_work = 0;
  double time_limit = 0.0;
};

struct GraphSource {
  std::vector<int> bipartite;
  std::string edges;
};

lacuna_options make_options(const Budgets& b) {
  lacuna_options o;
  lacuna_options_init(&o);
  o.threads = b.threads;
  o.oracle_max_edges = b.max_oracle_edges;
  o.max_work = b.max_work;
  o.time_limit_seconds = b.time_limit;
  if (b.engine == "oracle") o.engine = LACUNA_ENGINE_ORACLE;
  else if (b.engine == "flow") o.engine = LACUNA_ENGINE_FLOW;
  else if (b.engine == "symmetric") o.engine = LACUNA_ENGINE_SYMMETRIC;
  else o.engine = LACUNA_ENGINE_AUTO;
  return o;
}

bool has_source(const GraphSource& src) { return !src.bipartite.empty() || !src.edges.empty(); }

GraphHandle load_graph(const GraphSource& src, std::string* label) {
  lacuna_graph* raw = nullptr;
  if (!src.bipartite.empty() && !src.edges.empty()) {
    throw CliFailure{kExitUsage, "give exactly one of --bipartite or --edges"};
  }
  if (!src.bipartite.empty()) {
    check(lacuna_graph_bipartite(src.bipartite[0], src.bipartite[1], &raw));
    if (label) {
      *label = "K_{" + std::to_string(src.bipartite[0]) + "," + std::to_string(src.bipartite[1]) + "}";
    }
  } else if (!src.edges.empty()) {
    const lacuna_status status = lacuna_graph_load(src.edges.c_str(), &raw);
    if (status == LACUNA_ERR_PARSE) {
      throw CliFailure{kExitUsage, src.edges + ": " + lacuna_last_error()};
    }
    check(status);
    if (label) *label = src.edges;
  } else {
    throw CliFailure{kExitUsage, "a graph source is required (--bipartite M N or --edges FILE)"};
  }
  return GraphHandle(raw);
}

// Collects command output; written to --output or stdout once the command
// has fully succeeded so that refusals never leave partial results behind.
class Sink {
 public:
  explicit Sink(std::string path) : path_(std::move(path)) {}
  std::ostringstream& out() { return buffer_; }
  void flush() {
    if (path_.empty()) {
      std::cout << buffer_.str();
      std::cout.flush();
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw CliFailure{kExitUsage, "cannot write '" + path_ + "'"};
    file << buffer_.str();
  }

 private:
  std::string path_;
  std::ostringstream buffer_;
};

std::vector<std::string> coefficients(const lacuna_poly* p) {
  std::vector<std::string> out;
  for (int k = 0; k <= lacuna_poly_degree(p); ++k) {
    char* s = nullptr;
    check(lacuna_poly_coefficient(p, static_cast<size_t>(k), &s));
    out.push_back(take(s));
  }
  return out;
}

std::string value_at_one(const lacuna_poly* p) {
  char* s = nullptr;
  check(lacuna_poly_evaluate(p, "1", &s));
  return take(s);
}

std::string text_of(const lacuna_poly* p) {
  char* s = nullptr;
  check(lacuna_poly_to_text(p, &s));
  return take(s);
}

// ---- poly ----------------------------------------------------------------

int cmd_poly(const GraphSource& src, const Budgets& b) {
  std::string label;
  const GraphHandle g = load_graph(src, &label);
  lacuna_options o = make_options(b);
  const lacuna_engine engine = lacuna_resolve_engine(g.get(), o.engine);

  const auto start = std::chrono::steady_clock::now();
  lacuna_poly* raw = nullptr;
  check(lacuna_poly_compute(g.get(), &o, &raw));
  const PolyHandle p(raw);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Sink sink(b.output);
  const int degree = lacuna_poly_degree(p.get());
  const std::string value = value_at_one(p.get());
  if (b.format == "json") {
    char* s = nullptr;
    check(lacuna_poly_to_json(p.get(), label.c_str(), &s));
    auto j = nlohmann::ordered_json::parse(take(s));
    j["degree"] = degree;
    j["value_at_1"] = value;
    j["engine"] = lacuna_engine_name(engine);
    sink.out() << j.dump() << '\n';
  } else if (b.format == "csv") {
    nlohmann::json coeffs = coefficients(p.get());
    std::string field = coeffs.dump();
    std::string quoted = "\"";
    for (char c : field) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    sink.out() << "graph,degree,coeffs,value_at_1,engine\n"
               << label << ',' << degree << ',' << quoted << ',' << value << ','
               << lacuna_engine_name(engine) << '\n';
  } else {
    sink.out() << text_of(p.get()) << '\n'
               << "degree: " << degree << '\n'
               << "L(1): " << value << '\n'
               << "engine: " << lacuna_engine_name(engine) << '\n';
  }
  sink.flush();
  std::fprintf(stderr, "elapsed: %.3f s\n", elapsed);
  return kExitOk;
}

// ---- sto -----------------------------------------------------------------

struct ListState {
  std::ostringstream* out;
};

void print_configuration(const int* grains, size_t length, int level, void* user) {
  auto& out = *static_cast<ListState*>(user)->out;
  for (size_t i = 0; i < length; ++i) {
    if (i) out << ' ';
    out << grains[i];
  }
  out << " : " << level << '\n';
}

int cmd_sto(const GraphSource& src, const Budgets& b, bool list, std::uint64_t max_lines) {
  std::string label;
  const GraphHandle g = load_graph(src, &label);
  lacuna_options o = make_options(b);
  Sink sink(b.output);
  if (list) {
    ListState state{&sink.out()};
    const lacuna_status status =
        lacuna_sto_list(g.get(), &o, max_lines, &print_configuration, &state);
    if (status == LACUNA_ERR_BUDGET) {
      throw CliFailure{kExitBudget, std::string(lacuna_last_error()) +
                                        "\nhint: rerun with --count, or raise --max-lines"};
    }
    check(status);
  } else {
    char* s = nullptr;
    check(lacuna_sto_count(g.get(), &o, &s));
    const std::string count = take(s);
    if (b.format == "json") {
      nlohmann::ordered_json j;
      j["graph"] = label;
      j["count"] = count;
      sink.out() << j.dump() << '\n';
    } else {
      sink.out() << count << '\n';
    }
  }
  sink.flush();
  return kExitOk;
}

// ---- scan ----------------------------------------------------------------

int cmd_scan(int max_total, const Budgets& b) {
  lacuna_options o = make_options(b);
  lacuna_scan* raw = nullptr;
  check(lacuna_scan_run(max_total, &o, &raw));
  const ScanHandle scan(raw);
  char* csv = nullptr;
  check(lacuna_scan_to_csv(scan.get(), &csv));
  Sink sink(b.output);
  sink.out() << take(csv);
  sink.flush();

  bool violation = false;
  for (size_t i = 0; i < lacuna_scan_size(scan.get()); ++i) {
    lacuna_scan_cell cell;
    check(lacuna_scan_get(scan.get(), i, &cell));
    if (cell.violation) {
      violation = true;
      lacuna_poly* p = nullptr;
      check(lacuna_scan_polynomial(scan.get(), i, &p));
      const PolyHandle poly(p);
      std::fprintf(stderr, "violation at (%d,%d): log_concave=%d unimodal=%d closed_form=%d: %s\n",
                   cell.m, cell.n, cell.log_concave, cell.unimodal, cell.closed_form_match,
                   text_of(poly.get()).c_str());
    }
  }
  return violation ? kExitViolation : kExitOk;
}

// ---- verify --------------------------------------------------------------

struct GoldenRow {
  int m;
  int n;
  std::vector<const char*> coeffs;
};

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows{
      {2, 2, {"1", "3"}},
      {2, 3, {"1", "4", "7"}},
      {2, 4, {"1", "5", "11", "15"}},
      {2, 5, {"1", "6", "16", "26", "31"}},
      {3, 2, {"1", "4", "8"}},
      {3, 3, {"1", "5", "15", "30", "39"}},
      {3, 4, {"1", "6", "21", "52", "100", "148", "158"}},
      {3, 5, {"1", "7", "28", "79", "175", "320", "490", "610", "585"}},
      {4, 2, {"1", "5", "12", "20"}},
      {4, 3, {"1", "6", "21", "53", "105", "162", "189"}},
      {4, 4, {"1", "7", "28", "84", "203", "413", "716", "1068", "1344", "1336"}},
      {5, 2, {"1", "6", "17", "32", "48"}},
      {5, 3, {"1", "7", "28", "80", "182", "347", "561", "756", "837"}},
  };
  return rows;
}

PolyHandle compute(int m, int n, lacuna_engine engine, const lacuna_options& base) {
  lacuna_graph* g = nullptr;
  check(lacuna_graph_bipartite(m, n, &g));
  const GraphHandle graph(g);
  lacuna_options o = base;
  o.engine = engine;
  lacuna_poly* p = nullptr;
  check(lacuna_poly_compute(graph.get(), &o, &p));
  return PolyHandle(p);
}

struct VerifyItem {
  std::string group;
  std::string name;
  std::function<bool(std::string&)> run;
};

std::vector<VerifyItem> verify_items(const lacuna_options& base) {
  std::vector<VerifyItem> items;
  for (const auto& row : golden_rows()) {
    const std::string name = "L_{" + std::to_string(row.m) + "," + std::to_string(row.n) + "}";
    items.push_back({"golden", name + " (flow + oracle)", [row, &base](std::string& detail) {
                       lacuna_poly* raw = nullptr;
                       check(lacuna_poly_from_strings(row.coeffs.data(), row.coeffs.size(), &raw));
                       const PolyHandle expected(raw);
                       const auto flow = compute(row.m, row.n, LACUNA_ENGINE_FLOW, base);
                       const auto oracle = compute(row.m, row.n, LACUNA_ENGINE_ORACLE, base);
                       const bool ok = lacuna_poly_equal(flow.get(), expected.get()) &&
                                       lacuna_poly_equal(oracle.get(), expected.get());
                       if (!ok) detail = "flow " + text_of(flow.get()) + "; oracle " + text_of(oracle.get());
                       return ok;
                     }});
  }

  items.push_back({"example", "Sto(K_{2,2}) by orientation union", [&base](std::string& detail) {
                     lacuna_graph* g = nullptr;
                     check(lacuna_graph_bipartite(2, 2, &g));
                     const GraphHandle graph(g);
                     lacuna_options o = base;
                     o.engine = LACUNA_ENGINE_ORACLE;
                     std::ostringstream listing;
                     ListState state{&listing};
                     check(lacuna_sto_list(graph.get(), &o, 100, &print_configuration, &state));
                     const std::string expected = "0 1 1 : 1\n1 0 1 : 1\n1 1 0 : 1\n1 1 1 : 0\n";
                     if (listing.str() != expected) detail = listing.str();
                     return listing.str() == expected;
                   }});

  items.push_back({"closed-forms", "K_{2,n} closed form, 1 <= n <= 10", [&base](std::string& detail) {
                     for (int n = 1; n <= 10; ++n) {
                       lacuna_poly* raw = nullptr;
                       check(lacuna_poly_closed_form_2n(n, &raw));
                       const PolyHandle closed(raw);
                       const auto engine = compute(2, n, LACUNA_ENGINE_FLOW, base);
                       if (!lacuna_poly_equal(closed.get(), engine.get())) {
                         detail = "mismatch at n=" + std::to_string(n);
                         return false;
                       }
                     }
                     return true;
                   }});
  items.push_back({"closed-forms", "K_{m,2} closed form, 1 <= m <= 10", [&base](std::string& detail) {
                     for (int m = 1; m <= 10; ++m) {
                       lacuna_poly* raw = nullptr;
                       check(lacuna_poly_closed_form_m2(m, &raw));
                       const PolyHandle closed(raw);
                       const auto engine = compute(m, 2, LACUNA_ENGINE_FLOW, base);
                       if (!lacuna_poly_equal(closed.get(), engine.get())) {
                         detail = "mismatch at m=" + std::to_string(m);
                         return false;
                       }
                     }
                     return true;
                   }});

  items.push_back({"bounds", "spanning-tree and stable-count bounds; L_{2,n}(1) = n 2^(n-1)",
                   [&base](std::string& detail) {
                     for (const auto& row : golden_rows()) {
                       const auto p = compute(row.m, row.n, LACUNA_ENGINE_SYMMETRIC, base);
                       lacuna_bounds bounds;
                       check(lacuna_bounds_report(row.m, row.n, value_at_one(p.get()).c_str(), &bounds));
                       const bool ok = bounds.lower_ok && bounds.upper_ok;
                       lacuna_bounds_release(&bounds);
                       if (!ok) {
                         detail = "bound fails at (" + std::to_string(row.m) + "," + std::to_string(row.n) + ")";
                         return false;
                       }
                     }
                     for (int n = 1; n <= 20; ++n) {
                       lacuna_poly* raw = nullptr;
                       check(lacuna_poly_closed_form_2n(n, &raw));
                       const PolyHandle p(raw);
                       const std::string expected = std::to_string(static_cast<long long>(n) << (n - 1));
                       if (value_at_one(p.get()) != expected) {
                         detail = "L_{2," + std::to_string(n) + "}(1) mismatch";
                         return false;
                       }
                     }
                     return true;
                   }});

  items.push_back({"roots", "L_{2,4} roots outside the sector", [](std::string& detail) {
                     const char* coeffs[] = {"1", "5", "11", "15"};
                     lacuna_poly* raw = nullptr;
                     check(lacuna_poly_from_strings(coeffs, 4, &raw));
                     const PolyHandle p(raw);
                     lacuna_roots* r = nullptr;
                     check(lacuna_roots_compute(p.get(), 0.0, &r));
                     const RootsHandle roots(r);
                     const double expected[3][2] = {{-1.0 / 3.0, 0.0}, {-0.2, -0.4}, {-0.2, 0.4}};
                     const lacuna_sector sectors[3] = {LACUNA_SECTOR_INSIDE, LACUNA_SECTOR_OUTSIDE,
                                                       LACUNA_SECTOR_OUTSIDE};
                     if (lacuna_roots_count(roots.get()) != 3) return false;
                     for (size_t i = 0; i < 3; ++i) {
                       lacuna_root root;
                       check(lacuna_roots_get(roots.get(), i, &root));
                       if (std::abs(root.re - expected[i][0]) > 1e-8 ||
                           std::abs(root.im - expected[i][1]) > 1e-8 || root.residual > 1e-8 ||
                           root.sector != sectors[i]) {
                         detail = "root " + std::to_string(i) + " off";
                         return false;
                       }
                     }
                     return true;
                   }});
  return items;
}

int cmd_verify(const std::string& only, const Budgets& b) {
  const lacuna_options base = make_options(b);
  const auto items = verify_items(base);
  Sink sink(b.output);
  int run = 0;
  int passed = 0;
  for (const auto& item : items) {
    if (!only.empty() && item.group != only) continue;
    ++run;
    std::string detail;
    bool ok = false;
    try {
      ok = item.run(detail);
    } catch (const CliFailure& f) {
      detail = f.message;
    }
    passed += ok ? 1 : 0;
    sink.out() << (ok ? "[PASS] " : "[FAIL] ") << item.group << ": " << item.name;
    if (!ok && !detail.empty()) sink.out() << " -- " << detail;
    sink.out() << '\n';
  }
  if (run == 0) throw CliFailure{kExitUsage, "no verification group named '" + only + "'"};
  sink.out() << passed << '/' << run << " passed\n";
  sink.flush();
  return passed == run ? kExitOk : kExitViolation;
}

// ---- analyze -------------------------------------------------------------

std::string describe_verdict(const lacuna_verdict& v, const std::vector<std::string>& c) {
  if (v.holds) return "true";
  std::string out = "false";
  if (v.has_witness) {
    const size_t k = v.index;
    const std::string prev = k >= 1 ? c[k - 1] : "0";
    const std::string next = k + 1 < c.size() ? c[k + 1] : "0";
    out += " (witness k=" + std::to_string(k) + ": " + prev + ", " + c[k] + ", " + next;
    if (v.internal_zero) out += "; internal zero";
    out += ")";
  }
  return out;
}

int cmd_analyze(const std::string& coeff_text, const GraphSource& src, const Budgets& b) {
  if (coeff_text.empty() == !has_source(src)) {
    throw CliFailure{kExitUsage, "give exactly one of --coeffs, --bipartite, --edges"};
  }
  PolyHandle p;
  if (!coeff_text.empty()) {
    lacuna_poly* raw = nullptr;
    const lacuna_status status = lacuna_poly_parse_list(coeff_text.c_str(), &raw);
    if (status == LACUNA_ERR_PARSE) {
      throw CliFailure{kExitUsage, std::string("--coeffs: ") + lacuna_last_error()};
    }
    check(status);
    p.reset(raw);
  } else {
    const GraphHandle g = load_graph(src, nullptr);
    lacuna_options o = make_options(b);
    lacuna_poly* raw = nullptr;
    check(lacuna_poly_compute(g.get(), &o, &raw));
    p.reset(raw);
  }

  const auto c = coefficients(p.get());
  Sink sink(b.output);
  auto& out = sink.out();
  out << "polynomial: " << text_of(p.get()) << '\n';

  lacuna_verdict lc;
  const lacuna_status lc_status = lacuna_poly_log_concave(p.get(), &lc);
  if (lc_status == LACUNA_ERR_PRECONDITION) {
    out << "log-concave: undefined (" << lacuna_last_error() << ")\n";
  } else {
    check(lc_status);
    out << "log-concave: " << describe_verdict(lc, c) << '\n';
  }
  lacuna_verdict uni;
  check(lacuna_poly_unimodal(p.get(), &uni));
  out << "unimodal: " << describe_verdict(uni, c) << '\n';

  if (lacuna_poly_degree(p.get()) >= 1) {
    lacuna_roots* raw = nullptr;
    check(lacuna_roots_compute(p.get(), 0.0, &raw));
    const RootsHandle roots(raw);
    out << "roots:\n";
    size_t outside = 0;
    size_t indeterminate = 0;
    char line[160];
    for (size_t i = 0; i < lacuna_roots_count(roots.get()); ++i) {
      lacuna_root r;
      check(lacuna_roots_get(roots.get(), i, &r));
      const char* where = r.sector == LACUNA_SECTOR_INSIDE    ? "inside"
                          : r.sector == LACUNA_SECTOR_OUTSIDE ? "outside"
                                                              : "indeterminate";
      outside += r.sector == LACUNA_SECTOR_OUTSIDE ? 1 : 0;
      indeterminate += r.sector == LACUNA_SECTOR_INDETERMINATE ? 1 : 0;
      // Normalize negative zero so output is stable.
      const double re = r.re == 0.0 ? 0.0 : r.re;
      const double im = std::abs(r.im) < 5e-13 ? 0.0 : r.im;
      std::snprintf(line, sizeof line, "  %+.12f %+.12fi  residual %.1e  %s\n", re, im,
                    r.residual, where);
      out << line;
    }
    if (outside == 0 && indeterminate == 0) {
      out << "sector: all roots inside\n";
    } else {
      out << "sector: violated by " << outside << " roots";
      if (indeterminate) out << " (" << indeterminate << " indeterminate)";
      out << '\n';
    }
  } else {
    out << "roots: none (constant polynomial)\n";
  }

  if (lacuna_poly_degree(p.get()) >= 0) {
    char* rev = nullptr;
    check(lacuna_poly_reverse(p.get(), lacuna_poly_degree(p.get()), &rev));
    out << "level coefficients: " << take(rev) << '\n';
  }

  if (!src.bipartite.empty()) {
    lacuna_bounds bounds;
    check(lacuna_bounds_report(src.bipartite[0], src.bipartite[1], value_at_one(p.get()).c_str(),
                               &bounds));
    const char* dom = bounds.dominates == LACUNA_DOMINANCE_BELOW   ? "below"
                      : bounds.dominates == LACUNA_DOMINANCE_EQUAL ? "equal"
                                                                   : "above";
    out << "sto_count: " << bounds.sto_count << '\n'
        << "lower_bound: " << bounds.spanning_tree_count << (bounds.lower_ok ? " (ok)" : " (FAILED)")
        << '\n'
        << "upper_bound: " << bounds.stable_count << (bounds.upper_ok ? " (ok)" : " (FAILED)") << '\n'
        << "dominates: " << dom << " (sto_count vs upper_bound/2)\n";
    lacuna_bounds_release(&bounds);
  }
  sink.flush();
  return kExitOk;
}

void add_budgets(CLI::App* cmd, Budgets& b, bool with_engine) {
  cmd->add_option("--threads", b.threads, "Worker threads (default: LACUNA_THREADS or hardware)");
  if (with_engine) {
    cmd->add_option("--engine", b.engine, "oracle | flow | symmetric | auto")
        ->check(CLI::IsMember({"oracle", "flow", "symmetric", "auto"}));
  }
  cmd->add_option("--format", b.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output,-o", b.output, "Write to a file instead of standard output");
  cmd->add_option("--max-oracle-edges", b.max_oracle_edges, "Edge cap for the orientation oracle")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-work", b.max_work,
                  "Largest number of configurations (flow) or orbits (symmetric) to visit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", b.time_limit, "Soft wall-clock cap in seconds")
      ->check(CLI::PositiveNumber);
}

void add_source(CLI::App* cmd, GraphSource& src) {
  auto* bip = cmd->add_option("--bipartite", src.bipartite, "Complete bipartite K_{M,N} (sink in the M part)")
                  ->expected(2);
  bip->type_name("M N");
  auto* edges = cmd->add_option("--edges", src.edges, "Edge-list file: \"V E S\" then E lines \"u v\"");
  bip->excludes(edges);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastically recurrent states and lacking polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lacuna_version()));

  Budgets budgets;
  GraphSource source;

  auto* poly = app.add_subcommand("poly", "Compute a lacking polynomial");
  add_source(poly, source);
  add_budgets(poly, budgets, true);

  bool list = false;
  bool count = false;
  std::uint64_t max_lines = 1000000;
  auto* sto = app.add_subcommand("sto", "List or count stochastically recurrent states");
  add_source(sto, source);
  add_budgets(sto, budgets, true);
  auto* list_flag = sto->add_flag("--list", list, "One configuration per line: \"c1 c2 ... : level\"");
  auto* count_flag = sto->add_flag("--count", count, "Print only the number of states (default)");
  list_flag->excludes(count_flag);
  sto->add_option("--max-lines", max_lines, "Refuse listings longer than this")->check(CLI::PositiveNumber);

  int max_total = 0;
  auto* scan = app.add_subcommand("scan", "Check log-concavity and unimodality for 2 <= m, n, m + n <= T");
  scan->add_option("--max-total", max_total, "Largest m + n")->required()->check(CLI::NonNegativeNumber);
  add_budgets(scan, budgets, false);

  std::string only;
  auto* verify = app.add_subcommand("verify", "Run the built-in golden checks");
  verify->add_option("--only", only, "golden | example | closed-forms | bounds | roots")
      ->check(CLI::IsMember({"golden", "example", "closed-forms", "bounds", "roots"}));
  add_budgets(verify, budgets, false);

  std::string coeffs;
  auto* analyze = app.add_subcommand("analyze", "Sequence, root and bound diagnostics");
  analyze->add_option("--coeffs", coeffs, "Comma-separated coefficients, constant term first");
  add_source(analyze, source);
  add_budgets(analyze, budgets, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(source, budgets);
    if (*sto) return cmd_sto(source, budgets, list, max_lines);
    if (*scan) return cmd_scan(max_total, budgets);
    if (*verify) return cmd_verify(only, budgets);
    if (*analyze) return cmd_analyze(coeffs, source, budgets);
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitUsage;
}
