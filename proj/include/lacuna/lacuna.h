/*
 * lacuna C API.
 *
 * Opaque handles are created by lacuna_*_create / lacuna_*_compute style
 * functions and released with the matching *_free. Every fallible call
 * returns a lacuna_status; on failure lacuna_last_error() describes what went
 * wrong on the calling thread. Strings returned through `char**` are
 * heap-allocated and must be released with lacuna_string_free.
 */
#ifndef LACUNA_LACUNA_H
#define LACUNA_LACUNA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LACUNA_BUILDING_LIBRARY)
#    define LACUNA_API __declspec(dllexport)
#  else
#    define LACUNA_API __declspec(dllimport)
#  endif
#else
#  define LACUNA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lacuna_status {
  LACUNA_OK = 0,
  LACUNA_ERR_INVALID_ARGUMENT = 1,
  LACUNA_ERR_INVALID_SPEC = 2,
  LACUNA_ERR_LOOP_EDGE = 3,
  LACUNA_ERR_DUPLICATE_EDGE = 4,
  LACUNA_ERR_DISCONNECTED = 5,
  LACUNA_ERR_BAD_SINK = 6,
  LACUNA_ERR_BAD_VERTEX = 7,
  LACUNA_ERR_PARSE = 8,
  LACUNA_ERR_UNSTABLE = 9,
  LACUNA_ERR_PRECONDITION = 10,
  LACUNA_ERR_BUDGET = 11,
  LACUNA_ERR_SIZE_CAP = 12,
  LACUNA_ERR_NO_CONVERGENCE = 13,
  LACUNA_ERR_INTERNAL = 14
} lacuna_status;

typedef enum lacuna_engine {
  LACUNA_ENGINE_AUTO = 0,
  LACUNA_ENGINE_ORACLE = 1,
  LACUNA_ENGINE_FLOW = 2,
  LACUNA_ENGINE_SYMMETRIC = 3
} lacuna_engine;

typedef enum lacuna_sector {
  LACUNA_SECTOR_INSIDE = 0,
  LACUNA_SECTOR_OUTSIDE = 1,
  LACUNA_SECTOR_INDETERMINATE = 2
} lacuna_sector;

typedef enum lacuna_dominance {
  LACUNA_DOMINANCE_BELOW = -1,
  LACUNA_DOMINANCE_EQUAL = 0,
  LACUNA_DOMINANCE_ABOVE = 1
} lacuna_dominance;

typedef struct lacuna_graph lacuna_graph;
typedef struct lacuna_poly lacuna_poly;
typedef struct lacuna_roots lacuna_roots;
typedef struct lacuna_scan lacuna_scan;

/* Engine selection and budgets. Zero-valued limits mean "no limit". */
typedef struct lacuna_options {
  lacuna_engine engine;
  unsigned threads;            /* 0: LACUNA_THREADS env or hardware */
  uint64_t oracle_max_edges;   /* default 24 */
  uint64_t max_work;           /* configurations (flow) or orbits (symmetric) */
  double time_limit_seconds;   /* soft wall-clock cap */
} lacuna_options;

typedef struct lacuna_verdict {
  int holds;
  int has_witness;
  size_t index;                /* middle position of the violated triple */
  int internal_zero;
} lacuna_verdict;

typedef struct lacuna_root {
  double re;
  double im;
  double residual;
  lacuna_sector sector;
} lacuna_root;

/* Decimal strings owned by the struct; release with lacuna_bounds_release. */
typedef struct lacuna_bounds {
  int m;
  int n;
  char* sto_count;
  char* stable_count;
  char* spanning_tree_count;
  int lower_ok;
  int upper_ok;
  lacuna_dominance dominates;
} lacuna_bounds;

typedef struct lacuna_scan_cell {
  int m;
  int n;
  int budget_exhausted;
  int degree;
  int log_concave;
  int unimodal;
  int closed_form_checked;
  int closed_form_match;
  int violation;
} lacuna_scan_cell;

typedef void (*lacuna_config_callback)(const int* grains, size_t length, int level,
                                       void* user);

LACUNA_API const char* lacuna_version(void);
LACUNA_API const char* lacuna_status_string(lacuna_status status);
LACUNA_API const char* lacuna_last_error(void);
/* 1-based line of the last parse error, 0 if none. */
LACUNA_API size_t lacuna_last_error_line(void);
/* 1-based column of the last parse error, 0 if unknown. */
LACUNA_API size_t lacuna_last_error_column(void);
LACUNA_API void lacuna_string_free(char* s);
LACUNA_API void lacuna_options_init(lacuna_options* options);

/* graphs */
LACUNA_API lacuna_status lacuna_graph_bipartite(int m, int n, lacuna_graph** out);
/* pairs holds 2*edge_count vertex indices. */
LACUNA_API lacuna_status lacuna_graph_from_edges(int vertex_count, const int* pairs,
                                                 size_t edge_count, int sink,
                                                 lacuna_graph** out);
LACUNA_API lacuna_status lacuna_graph_parse(const char* text, lacuna_graph** out);
LACUNA_API lacuna_status lacuna_graph_load(const char* path, lacuna_graph** out);
LACUNA_API void lacuna_graph_free(lacuna_graph* g);
LACUNA_API int lacuna_graph_vertex_count(const lacuna_graph* g);
LACUNA_API size_t lacuna_graph_edge_count(const lacuna_graph* g);
LACUNA_API int lacuna_graph_sink(const lacuna_graph* g);
LACUNA_API lacuna_status lacuna_graph_degree(const lacuna_graph* g, int v, int* out);
LACUNA_API int lacuna_graph_cycle_rank(const lacuna_graph* g);
/* Nonzero with m, n filled when the graph was built by lacuna_graph_bipartite. */
LACUNA_API int lacuna_graph_bipartite_spec(const lacuna_graph* g, int* m, int* n);
LACUNA_API lacuna_status lacuna_graph_serialize(const lacuna_graph* g, char** out);

/* stochastically recurrent states */
LACUNA_API lacuna_status lacuna_is_recurrent(const lacuna_graph* g, const int* grains,
                                             size_t length, int* out);
LACUNA_API lacuna_status lacuna_hall_check(const lacuna_graph* g, const int* grains,
                                           size_t length, int* out);
LACUNA_API lacuna_status lacuna_sto_count(const lacuna_graph* g, const lacuna_options* o,
                                          char** out);
/* Lists members in lexicographic order. Refuses with LACUNA_ERR_BUDGET, before
 * calling the callback, when there are more than max_lines members. */
LACUNA_API lacuna_status lacuna_sto_list(const lacuna_graph* g, const lacuna_options* o,
                                         uint64_t max_lines, lacuna_config_callback cb,
                                         void* user);

/* polynomials */
LACUNA_API lacuna_status lacuna_poly_compute(const lacuna_graph* g, const lacuna_options* o,
                                             lacuna_poly** out);
/* The engine that an AUTO request resolves to for this graph. */
LACUNA_API lacuna_engine lacuna_resolve_engine(const lacuna_graph* g, lacuna_engine requested);
LACUNA_API const char* lacuna_engine_name(lacuna_engine engine);
LACUNA_API lacuna_status lacuna_poly_closed_form_2n(int n, lacuna_poly** out);
LACUNA_API lacuna_status lacuna_poly_closed_form_m2(int m, lacuna_poly** out);
LACUNA_API lacuna_status lacuna_poly_from_strings(const char* const* coeffs, size_t count,
                                                  lacuna_poly** out);
/* "1,5,11,15"; parse errors report the column via lacuna_last_error_column. */
LACUNA_API lacuna_status lacuna_poly_parse_list(const char* text, lacuna_poly** out);
LACUNA_API lacuna_status lacuna_poly_parse_json(const char* json, lacuna_poly** out);
LACUNA_API void lacuna_poly_free(lacuna_poly* p);
LACUNA_API int lacuna_poly_degree(const lacuna_poly* p);
LACUNA_API int lacuna_poly_equal(const lacuna_poly* a, const lacuna_poly* b);
LACUNA_API lacuna_status lacuna_poly_coefficient(const lacuna_poly* p, size_t k, char** out);
LACUNA_API lacuna_status lacuna_poly_to_text(const lacuna_poly* p, char** out);
LACUNA_API lacuna_status lacuna_poly_to_json(const lacuna_poly* p, const char* label,
                                             char** out);
/* Exact evaluation at an integer or "p/q" rational given as a string. */
LACUNA_API lacuna_status lacuna_poly_evaluate(const lacuna_poly* p, const char* point,
                                              char** out);
/* Comma-separated reversed coefficient list padded to top_degree + 1 entries. */
LACUNA_API lacuna_status lacuna_poly_reverse(const lacuna_poly* p, int top_degree,
                                             char** out);

/* analysis */
LACUNA_API lacuna_status lacuna_poly_log_concave(const lacuna_poly* p, lacuna_verdict* out);
LACUNA_API lacuna_status lacuna_poly_unimodal(const lacuna_poly* p, lacuna_verdict* out);
/* tolerance <= 0 selects the default 1e-12. */
LACUNA_API lacuna_status lacuna_roots_compute(const lacuna_poly* p, double tolerance,
                                              lacuna_roots** out);
LACUNA_API void lacuna_roots_free(lacuna_roots* r);
LACUNA_API size_t lacuna_roots_count(const lacuna_roots* r);
LACUNA_API lacuna_status lacuna_roots_get(const lacuna_roots* r, size_t i, lacuna_root* out);
LACUNA_API lacuna_status lacuna_bounds_report(int m, int n, const char* sto_count,
                                              lacuna_bounds* out);
LACUNA_API void lacuna_bounds_release(lacuna_bounds* b);
LACUNA_API lacuna_status lacuna_scan_run(int max_total, const lacuna_options* o,
                                         lacuna_scan** out);
LACUNA_API void lacuna_scan_free(lacuna_scan* s);
LACUNA_API size_t lacuna_scan_size(const lacuna_scan* s);
LACUNA_API lacuna_status lacuna_scan_get(const lacuna_scan* s, size_t i, lacuna_scan_cell* out);
LACUNA_API lacuna_status lacuna_scan_polynomial(const lacuna_scan* s, size_t i,
                                                lacuna_poly** out);
LACUNA_API lacuna_status lacuna_scan_to_csv(const lacuna_scan* s, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LACUNA_LACUNA_H */
