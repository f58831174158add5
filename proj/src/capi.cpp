#include "lacuna/lacuna.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <thread>

#include "lacuna/analysis.hpp"
#include "lacuna/error.hpp"
#include "lacuna/graph.hpp"
#include "lacuna/flow.hpp"
#include "lacuna/orientation.hpp"
#include "lacuna/polynomial.hpp"
#include "lacuna/recurrence.hpp"

struct lacuna_graph {
  lacuna::Graph graph;
  std::optional<lacuna::BipartiteSpec> spec;
};

struct lacuna_poly {
  lacuna::LackingPolynomial poly;
};

struct lacuna_roots {
  lacuna::RootReport report;
};

struct lacuna_scan {
  std::vector<lacuna::ScanCell> cells;
};

namespace {

struct ErrorState {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local ErrorState last_error;

lacuna_status status_of(lacuna::ErrorKind kind) {
  using lacuna::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidSpec: return LACUNA_ERR_INVALID_SPEC;
    case ErrorKind::kLoopEdge: return LACUNA_ERR_LOOP_EDGE;
    case ErrorKind::kDuplicateEdge: return LACUNA_ERR_DUPLICATE_EDGE;
    case ErrorKind::kDisconnected: return LACUNA_ERR_DISCONNECTED;
    case ErrorKind::kBadSink: return LACUNA_ERR_BAD_SINK;
    case ErrorKind::kBadVertex: return LACUNA_ERR_BAD_VERTEX;
    case ErrorKind::kParse: return LACUNA_ERR_PARSE;
    case ErrorKind::kUnstable: return LACUNA_ERR_UNSTABLE;
    case ErrorKind::kPrecondition: return LACUNA_ERR_PRECONDITION;
    case ErrorKind::kBudget: return LACUNA_ERR_BUDGET;
    case ErrorKind::kSizeCap: return LACUNA_ERR_SIZE_CAP;
    case ErrorKind::kNoConvergence: return LACUNA_ERR_NO_CONVERGENCE;
  }
  return LACUNA_ERR_INTERNAL;
}

lacuna_status fail(lacuna_status status, std::string message) {
  last_error = ErrorState{std::move(message), 0, 0};
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
lacuna_status guarded(Fn&& fn) noexcept {
  try {
    last_error = ErrorState{};
    fn();
    return LACUNA_OK;
  } catch (const lacuna::ParseError& e) {
    last_error = ErrorState{e.what(), e.line(), e.column()};
    return LACUNA_ERR_PARSE;
  } catch (const lacuna::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LACUNA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LACUNA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LACUNA_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("LACUNA_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

lacuna_options defaults() {
  lacuna_options o;
  lacuna_options_init(&o);
  return o;
}

lacuna::EngineOptions engine_limits(const lacuna_options& o) {
  lacuna::EngineOptions limits;
  limits.threads = resolve_threads(o.threads);
  if (o.max_work != 0) limits.max_work = o.max_work;
  if (o.time_limit_seconds > 0) {
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(o.time_limit_seconds));
  }
  return limits;
}

lacuna::Configuration to_configuration(const int* grains, std::size_t length) {
  if (grains == nullptr && length != 0) {
    throw lacuna::Error(lacuna::ErrorKind::kPrecondition, "null grain array");
  }
  return lacuna::Configuration{std::vector<int>(grains, grains + length)};
}

void require(bool condition, const char* what) {
  if (!condition) throw lacuna::Error(lacuna::ErrorKind::kPrecondition, what);
}

lacuna_verdict to_c(const lacuna::SequenceVerdict& v) {
  lacuna_verdict out{};
  out.holds = v.holds ? 1 : 0;
  out.has_witness = v.witness ? 1 : 0;
  if (v.witness) {
    out.index = v.witness->index;
    out.internal_zero = v.witness->internal_zero ? 1 : 0;
  }
  return out;
}

}  // namespace

extern "C" {

const char* lacuna_version(void) { return "0.1.0"; }

const char* lacuna_status_string(lacuna_status status) {
  switch (status) {
    case LACUNA_OK: return "ok";
    case LACUNA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LACUNA_ERR_INVALID_SPEC: return "invalid specification";
    case LACUNA_ERR_LOOP_EDGE: return "loop edge";
    case LACUNA_ERR_DUPLICATE_EDGE: return "duplicate edge";
    case LACUNA_ERR_DISCONNECTED: return "disconnected graph";
    case LACUNA_ERR_BAD_SINK: return "bad sink index";
    case LACUNA_ERR_BAD_VERTEX: return "bad vertex index";
    case LACUNA_ERR_PARSE: return "parse error";
    case LACUNA_ERR_UNSTABLE: return "unstable configuration";
    case LACUNA_ERR_PRECONDITION: return "precondition violated";
    case LACUNA_ERR_BUDGET: return "budget exceeded";
    case LACUNA_ERR_SIZE_CAP: return "size cap exceeded";
    case LACUNA_ERR_NO_CONVERGENCE: return "no convergence";
    case LACUNA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lacuna_last_error(void) { return last_error.message.c_str(); }
size_t lacuna_last_error_line(void) { return last_error.line; }
size_t lacuna_last_error_column(void) { return last_error.column; }

void lacuna_string_free(char* s) { std::free(s); }

void lacuna_options_init(lacuna_options* options) {
  if (options == nullptr) return;
  options->engine = LACUNA_ENGINE_AUTO;
  options->threads = 0;
  options->oracle_max_edges = 24;
  options->max_work = 0;
  options->time_limit_seconds = 0.0;
}

// graphs

lacuna_status lacuna_graph_bipartite(int m, int n, lacuna_graph** out) {
  if (out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null output handle");
  return guarded([&] {
    *out = new lacuna_graph{lacuna::make_complete_bipartite({m, n}), lacuna::BipartiteSpec{m, n}};
  });
}

lacuna_status lacuna_graph_from_edges(int vertex_count, const int* pairs, size_t edge_count,
                                      int sink, lacuna_graph** out) {
  if (out == nullptr || (pairs == nullptr && edge_count != 0)) {
    return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<std::pair<int, int>> list;
    list.reserve(edge_count);
    for (size_t e = 0; e < edge_count; ++e) list.emplace_back(pairs[2 * e], pairs[2 * e + 1]);
    *out = new lacuna_graph{lacuna::Graph::from_edge_list(vertex_count, list, sink), std::nullopt};
  });
}

lacuna_status lacuna_graph_parse(const char* text, lacuna_graph** out) {
  if (out == nullptr || text == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new lacuna_graph{lacuna::parse_edge_list(text), std::nullopt}; });
}

lacuna_status lacuna_graph_load(const char* path, lacuna_graph** out) {
  if (out == nullptr || path == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new lacuna_graph{lacuna::read_edge_list_file(path), std::nullopt}; });
}

void lacuna_graph_free(lacuna_graph* g) { delete g; }

int lacuna_graph_vertex_count(const lacuna_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t lacuna_graph_edge_count(const lacuna_graph* g) { return g ? g->graph.edge_count() : 0; }
int lacuna_graph_sink(const lacuna_graph* g) { return g ? g->graph.sink() : -1; }

lacuna_status lacuna_graph_degree(const lacuna_graph* g, int v, int* out) {
  if (g == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  if (v < 0 || v >= g->graph.vertex_count()) return fail(LACUNA_ERR_BAD_VERTEX, "no such vertex");
  *out = g->graph.degree(v);
  return LACUNA_OK;
}

int lacuna_graph_cycle_rank(const lacuna_graph* g) { return g ? lacuna::cycle_rank(g->graph) : 0; }

int lacuna_graph_bipartite_spec(const lacuna_graph* g, int* m, int* n) {
  if (g == nullptr || !g->spec) return 0;
  if (m) *m = g->spec->m;
  if (n) *n = g->spec->n;
  return 1;
}

lacuna_status lacuna_graph_serialize(const lacuna_graph* g, char** out) {
  if (g == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(lacuna::to_edge_list(g->graph)); });
}

// stochastically recurrent states

lacuna_status lacuna_is_recurrent(const lacuna_graph* g, const int* grains, size_t length,
                                  int* out) {
  if (g == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = lacuna::is_stochastically_recurrent(g->graph, to_configuration(grains, length)) ? 1 : 0;
  });
}

lacuna_status lacuna_hall_check(const lacuna_graph* g, const int* grains, size_t length,
                                int* out) {
  if (g == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto c = to_configuration(grains, length);
    *out = lacuna::hall_condition_check(g->graph, c.grains) ? 1 : 0;
  });
}

lacuna_engine lacuna_resolve_engine(const lacuna_graph* g, lacuna_engine requested) {
  if (requested != LACUNA_ENGINE_AUTO) return requested;
  return g != nullptr && g->spec ? LACUNA_ENGINE_SYMMETRIC : LACUNA_ENGINE_FLOW;
}

const char* lacuna_engine_name(lacuna_engine engine) {
  switch (engine) {
    case LACUNA_ENGINE_AUTO: return "auto";
    case LACUNA_ENGINE_ORACLE: return "oracle";
    case LACUNA_ENGINE_FLOW: return "flow";
    case LACUNA_ENGINE_SYMMETRIC: return "symmetric";
  }
  return "unknown";
}

namespace {

lacuna::LackingPolynomial compute_polynomial(const lacuna_graph& g, const lacuna_options& o) {
  lacuna::PolynomialOptions options;
  options.limits = engine_limits(o);
  options.oracle_max_edges = o.oracle_max_edges;
  switch (lacuna_resolve_engine(&g, o.engine)) {
    case LACUNA_ENGINE_ORACLE:
      options.engine = lacuna::Engine::kOracle;
      return lacuna::lacking_polynomial(g.graph, options);
    case LACUNA_ENGINE_SYMMETRIC:
      require(g.spec.has_value(), "symmetric engine needs a complete bipartite graph");
      options.engine = lacuna::Engine::kSymmetric;
      return lacuna::lacking_polynomial(*g.spec, options);
    default:
      options.engine = lacuna::Engine::kFlow;
      return lacuna::lacking_polynomial(g.graph, options);
  }
}

}  // namespace

lacuna_status lacuna_sto_count(const lacuna_graph* g, const lacuna_options* o, char** out) {
  if (g == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const lacuna_options opts = o ? *o : defaults();
    *out = duplicate(lacuna::evaluate(compute_polynomial(*g, opts), lacuna::BigInt(1)).str());
  });
}

lacuna_status lacuna_sto_list(const lacuna_graph* g, const lacuna_options* o, uint64_t max_lines,
                              lacuna_config_callback cb, void* user) {
  if (g == nullptr || cb == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const lacuna_options opts = o ? *o : defaults();
    std::vector<lacuna::Configuration> members;
    if (opts.engine == LACUNA_ENGINE_ORACLE) {
      lacuna::OracleOptions oracle;
      oracle.max_edges = opts.oracle_max_edges;
      oracle.threads = resolve_threads(opts.threads);
      members = lacuna::sto_by_union(g->graph, oracle);
    } else {
      // Count first so that an oversized listing is refused cheaply.
      if (g->spec) {
        auto limits = engine_limits(opts);
        const auto total = lacuna::sto_bipartite_symmetric(*g->spec, limits).total();
        if (total > max_lines) {
          throw lacuna::Error(lacuna::ErrorKind::kBudget,
                              "listing would print " + total.str() + " lines (cap " +
                                  std::to_string(max_lines) + "); use count mode");
        }
      }
      members = lacuna::sto_fast(g->graph, engine_limits(opts), true).members;
    }
    if (members.size() > max_lines) {
      throw lacuna::Error(lacuna::ErrorKind::kBudget,
                          "listing would print " + std::to_string(members.size()) +
                              " lines (cap " + std::to_string(max_lines) + "); use count mode");
    }
    for (const auto& c : members) {
      cb(c.grains.data(), c.grains.size(), lacuna::level(g->graph, c), user);
    }
  });
}

// polynomials

lacuna_status lacuna_poly_compute(const lacuna_graph* g, const lacuna_options* o,
                                  lacuna_poly** out) {
  if (g == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const lacuna_options opts = o ? *o : defaults();
    *out = new lacuna_poly{compute_polynomial(*g, opts)};
  });
}

lacuna_status lacuna_poly_closed_form_2n(int n, lacuna_poly** out) {
  if (out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null output handle");
  return guarded([&] { *out = new lacuna_poly{lacuna::closed_form_2n(n)}; });
}

lacuna_status lacuna_poly_closed_form_m2(int m, lacuna_poly** out) {
  if (out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null output handle");
  return guarded([&] { *out = new lacuna_poly{lacuna::closed_form_m2(m)}; });
}

lacuna_status lacuna_poly_from_strings(const char* const* coeffs, size_t count,
                                       lacuna_poly** out) {
  if (out == nullptr || (coeffs == nullptr && count != 0)) {
    return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<lacuna::BigInt> values;
    for (size_t k = 0; k < count; ++k) {
      require(coeffs[k] != nullptr, "null coefficient string");
      const auto parsed = lacuna::parse_coefficient_list(coeffs[k]);
      if (parsed.size() != 1) throw lacuna::ParseError("expected a single integer", 1, 0);
      values.push_back(parsed.front());
    }
    *out = new lacuna_poly{lacuna::LackingPolynomial(std::move(values))};
  });
}

lacuna_status lacuna_poly_parse_list(const char* text, lacuna_poly** out) {
  if (out == nullptr || text == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lacuna_poly{lacuna::LackingPolynomial(lacuna::parse_coefficient_list(text))};
  });
}

lacuna_status lacuna_poly_parse_json(const char* json, lacuna_poly** out) {
  if (out == nullptr || json == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new lacuna_poly{lacuna::LackingPolynomial::from_json(json)}; });
}

void lacuna_poly_free(lacuna_poly* p) { delete p; }

int lacuna_poly_degree(const lacuna_poly* p) { return p ? p->poly.degree() : -1; }

int lacuna_poly_equal(const lacuna_poly* a, const lacuna_poly* b) {
  return a != nullptr && b != nullptr && a->poly == b->poly ? 1 : 0;
}

lacuna_status lacuna_poly_coefficient(const lacuna_poly* p, size_t k, char** out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(p->poly.coefficient(k).str()); });
}

lacuna_status lacuna_poly_to_text(const lacuna_poly* p, char** out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(p->poly.to_text()); });
}

lacuna_status lacuna_poly_to_json(const lacuna_poly* p, const char* label, char** out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(p->poly.to_json(label ? label : "")); });
}

lacuna_status lacuna_poly_evaluate(const lacuna_poly* p, const char* point, char** out) {
  if (p == nullptr || point == nullptr || out == nullptr) {
    return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const std::string text(point);
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const auto v = lacuna::parse_coefficient_list(text);
      if (v.size() != 1) throw lacuna::ParseError("expected an integer point", 1, 0);
      *out = duplicate(lacuna::evaluate(p->poly, v.front()).str());
      return;
    }
    const auto num = lacuna::parse_coefficient_list(text.substr(0, slash));
    const auto den = lacuna::parse_coefficient_list(text.substr(slash + 1));
    if (num.size() != 1 || den.size() != 1 || den.front() == 0) {
      throw lacuna::ParseError("expected a rational point p/q with q != 0", 1, slash + 1);
    }
    const lacuna::BigRational r(num.front(), den.front());
    *out = duplicate(lacuna::evaluate(p->poly, r).str());
  });
}

lacuna_status lacuna_poly_reverse(const lacuna_poly* p, int top_degree, char** out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto rev = lacuna::reverse_coefficients(p->poly, top_degree);
    std::string s;
    for (std::size_t k = 0; k < rev.size(); ++k) {
      if (k) s += ",";
      s += rev[k].str();
    }
    *out = duplicate(s);
  });
}

// analysis

lacuna_status lacuna_poly_log_concave(const lacuna_poly* p, lacuna_verdict* out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = to_c(lacuna::is_log_concave(p->poly.coefficients())); });
}

lacuna_status lacuna_poly_unimodal(const lacuna_poly* p, lacuna_verdict* out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = to_c(lacuna::is_unimodal(p->poly.coefficients())); });
}

lacuna_status lacuna_roots_compute(const lacuna_poly* p, double tolerance, lacuna_roots** out) {
  if (p == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    lacuna::RootOptions options;
    if (tolerance > 0) options.tolerance = tolerance;
    *out = new lacuna_roots{lacuna::roots(p->poly, options)};
  });
}

void lacuna_roots_free(lacuna_roots* r) { delete r; }

size_t lacuna_roots_count(const lacuna_roots* r) { return r ? r->report.roots.size() : 0; }

lacuna_status lacuna_roots_get(const lacuna_roots* r, size_t i, lacuna_root* out) {
  if (r == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= r->report.roots.size()) return fail(LACUNA_ERR_INVALID_ARGUMENT, "root index out of range");
  const auto& root = r->report.roots[i];
  out->re = root.value.real();
  out->im = root.value.imag();
  out->residual = root.residual;
  switch (root.sector) {
    case lacuna::SectorMembership::kInside: out->sector = LACUNA_SECTOR_INSIDE; break;
    case lacuna::SectorMembership::kOutside: out->sector = LACUNA_SECTOR_OUTSIDE; break;
    default: out->sector = LACUNA_SECTOR_INDETERMINATE; break;
  }
  return LACUNA_OK;
}

lacuna_status lacuna_bounds_report(int m, int n, const char* sto_count, lacuna_bounds* out) {
  if (sto_count == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  *out = lacuna_bounds{};
  return guarded([&] {
    const auto v = lacuna::parse_coefficient_list(sto_count);
    if (v.size() != 1) throw lacuna::ParseError("expected a single count", 1, 0);
    const auto r = lacuna::bounds_report({m, n}, v.front());
    out->m = r.m;
    out->n = r.n;
    out->sto_count = duplicate(r.sto_count.str());
    out->stable_count = duplicate(r.stable_count.str());
    out->spanning_tree_count = duplicate(r.spanning_tree_count.str());
    out->lower_ok = r.lower_ok ? 1 : 0;
    out->upper_ok = r.upper_ok ? 1 : 0;
    out->dominates = r.dominates == lacuna::Dominance::kBelow   ? LACUNA_DOMINANCE_BELOW
                     : r.dominates == lacuna::Dominance::kEqual ? LACUNA_DOMINANCE_EQUAL
                                                                : LACUNA_DOMINANCE_ABOVE;
  });
}

void lacuna_bounds_release(lacuna_bounds* b) {
  if (b == nullptr) return;
  std::free(b->sto_count);
  std::free(b->stable_count);
  std::free(b->spanning_tree_count);
  b->sto_count = b->stable_count = b->spanning_tree_count = nullptr;
}

lacuna_status lacuna_scan_run(int max_total, const lacuna_options* o, lacuna_scan** out) {
  if (out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null output handle");
  return guarded([&] {
    const lacuna_options opts = o ? *o : defaults();
    lacuna::ScanOptions options;
    options.limits = engine_limits(opts);
    *out = new lacuna_scan{lacuna::conjecture_scan(max_total, options)};
  });
}

void lacuna_scan_free(lacuna_scan* s) { delete s; }

size_t lacuna_scan_size(const lacuna_scan* s) { return s ? s->cells.size() : 0; }

lacuna_status lacuna_scan_get(const lacuna_scan* s, size_t i, lacuna_scan_cell* out) {
  if (s == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= s->cells.size()) return fail(LACUNA_ERR_INVALID_ARGUMENT, "cell index out of range");
  const auto& cell = s->cells[i];
  *out = lacuna_scan_cell{};
  out->m = cell.m;
  out->n = cell.n;
  out->budget_exhausted = cell.status == lacuna::CellStatus::kBudgetExhausted ? 1 : 0;
  out->degree = cell.polynomial.degree();
  out->log_concave = cell.log_concave.holds ? 1 : 0;
  out->unimodal = cell.unimodal.holds ? 1 : 0;
  out->closed_form_checked = cell.closed_form_match.has_value() ? 1 : 0;
  out->closed_form_match = cell.closed_form_match.value_or(false) ? 1 : 0;
  out->violation = cell.violation() ? 1 : 0;
  return LACUNA_OK;
}

lacuna_status lacuna_scan_polynomial(const lacuna_scan* s, size_t i, lacuna_poly** out) {
  if (s == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= s->cells.size()) return fail(LACUNA_ERR_INVALID_ARGUMENT, "cell index out of range");
  return guarded([&] { *out = new lacuna_poly{s->cells[i].polynomial}; });
}

lacuna_status lacuna_scan_to_csv(const lacuna_scan* s, char** out) {
  if (s == nullptr || out == nullptr) return fail(LACUNA_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = duplicate(lacuna::scan_to_csv(s->cells)); });
}

}  // extern "C"
