#include <doctest.h>

#include <lacuna/lacuna.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  lacuna_string_free(s);
  return out;
}

lacuna_graph* bipartite(int m, int n) {
  lacuna_graph* g = nullptr;
  REQUIRE(lacuna_graph_bipartite(m, n, &g) == LACUNA_OK);
  return g;
}

lacuna_poly* poly_of(const std::vector<const char*>& coeffs) {
  lacuna_poly* p = nullptr;
  REQUIRE(lacuna_poly_from_strings(coeffs.data(), coeffs.size(), &p) == LACUNA_OK);
  return p;
}

void collect(const int* grains, size_t length, int level, void* user) {
  auto& lines = *static_cast<std::vector<std::string>*>(user);
  std::string line;
  for (size_t i = 0; i < length; ++i) line += std::to_string(grains[i]) + " ";
  lines.push_back(line + ": " + std::to_string(level));
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::strlen(lacuna_version()) > 0);
  CHECK(std::string(lacuna_status_string(LACUNA_OK)) == "ok");
  CHECK(std::string(lacuna_status_string(LACUNA_ERR_BUDGET)).size() > 0);
}

TEST_CASE("graph construction reports typed errors") {
  lacuna_graph* g = nullptr;
  CHECK(lacuna_graph_bipartite(0, 3, &g) == LACUNA_ERR_INVALID_SPEC);
  CHECK(g == nullptr);
  CHECK(lacuna_graph_bipartite(2, 2, nullptr) == LACUNA_ERR_INVALID_ARGUMENT);

  const int loop[] = {0, 0, 0, 1};
  CHECK(lacuna_graph_from_edges(2, loop, 2, 0, &g) == LACUNA_ERR_LOOP_EDGE);
  const int dup[] = {0, 1, 1, 0};
  CHECK(lacuna_graph_from_edges(2, dup, 2, 0, &g) == LACUNA_ERR_DUPLICATE_EDGE);
  const int split[] = {0, 1, 2, 3};
  CHECK(lacuna_graph_from_edges(4, split, 2, 0, &g) == LACUNA_ERR_DISCONNECTED);
  const int path[] = {0, 1, 1, 2};
  CHECK(lacuna_graph_from_edges(3, path, 2, 7, &g) == LACUNA_ERR_BAD_SINK);
  const int far[] = {0, 1, 1, 5};
  CHECK(lacuna_graph_from_edges(3, far, 2, 0, &g) == LACUNA_ERR_BAD_VERTEX);
  CHECK(std::string(lacuna_last_error()).size() > 0);

  REQUIRE(lacuna_graph_from_edges(3, path, 2, 1, &g) == LACUNA_OK);
  CHECK(lacuna_graph_vertex_count(g) == 3);
  CHECK(lacuna_graph_edge_count(g) == 2);
  CHECK(lacuna_graph_sink(g) == 1);
  CHECK(lacuna_graph_cycle_rank(g) == 0);
  int d = 0;
  CHECK(lacuna_graph_degree(g, 1, &d) == LACUNA_OK);
  CHECK(d == 2);
  CHECK(lacuna_graph_degree(g, 9, &d) == LACUNA_ERR_BAD_VERTEX);
  int m = 0;
  int n = 0;
  CHECK(lacuna_graph_bipartite_spec(g, &m, &n) == 0);
  lacuna_graph_free(g);
}

TEST_CASE("edge-list parsing carries line numbers") {
  lacuna_graph* g = nullptr;
  CHECK(lacuna_graph_parse("3 2 0\n0 1\n1 q\n", &g) == LACUNA_ERR_PARSE);
  CHECK(lacuna_last_error_line() == 3);
  CHECK(lacuna_graph_parse("3 2 0\n0 1\n", &g) == LACUNA_ERR_PARSE);
  CHECK(lacuna_last_error_line() == 3);

  REQUIRE(lacuna_graph_parse("4 4 0\n0 2\n0 3\n1 2\n1 3\n", &g) == LACUNA_OK);
  CHECK(take([&] {
          char* s = nullptr;
          REQUIRE(lacuna_graph_serialize(g, &s) == LACUNA_OK);
          return s;
        }()) == "4 4 0\n0 2\n0 3\n1 2\n1 3\n");
  lacuna_graph_free(g);

  CHECK(lacuna_graph_load("/nonexistent/graph.txt", &g) != LACUNA_OK);
  REQUIRE(lacuna_graph_load(LACUNA_FIXTURE_DIR "/k22.txt", &g) == LACUNA_OK);
  CHECK(lacuna_graph_edge_count(g) == 4);
  lacuna_graph_free(g);
}

TEST_CASE("recurrence queries") {
  lacuna_graph* g = bipartite(2, 2);
  int yes = -1;
  const int top[] = {1, 1, 1};
  const int low[] = {0, 0, 1};
  CHECK(lacuna_is_recurrent(g, top, 3, &yes) == LACUNA_OK);
  CHECK(yes == 1);
  CHECK(lacuna_is_recurrent(g, low, 3, &yes) == LACUNA_OK);
  CHECK(yes == 0);
  int hall = -1;
  CHECK(lacuna_hall_check(g, low, 3, &hall) == LACUNA_OK);
  CHECK(hall == 0);
  const int unstable[] = {2, 0, 0};
  CHECK(lacuna_is_recurrent(g, unstable, 3, &yes) == LACUNA_ERR_UNSTABLE);
  CHECK(lacuna_is_recurrent(g, top, 2, &yes) == LACUNA_ERR_UNSTABLE);

  lacuna_options o;
  lacuna_options_init(&o);
  char* count = nullptr;
  REQUIRE(lacuna_sto_count(g, &o, &count) == LACUNA_OK);
  CHECK(take(count) == "4");

  for (lacuna_engine e : {LACUNA_ENGINE_ORACLE, LACUNA_ENGINE_FLOW, LACUNA_ENGINE_AUTO}) {
    o.engine = e;
    std::vector<std::string> lines;
    REQUIRE(lacuna_sto_list(g, &o, 10, &collect, &lines) == LACUNA_OK);
    CHECK(lines == std::vector<std::string>{"0 1 1 : 1", "1 0 1 : 1", "1 1 0 : 1", "1 1 1 : 0"});
  }
  std::vector<std::string> lines;
  o.engine = LACUNA_ENGINE_FLOW;
  CHECK(lacuna_sto_list(g, &o, 3, &collect, &lines) == LACUNA_ERR_BUDGET);
  CHECK(lines.empty());
  lacuna_graph_free(g);
}

TEST_CASE("polynomial engines agree through the C API") {
  lacuna_graph* g = bipartite(3, 4);
  lacuna_options o;
  lacuna_options_init(&o);
  lacuna_poly* expected =
      poly_of({"1", "6", "21", "52", "100", "148", "158"});
  for (lacuna_engine e : {LACUNA_ENGINE_ORACLE, LACUNA_ENGINE_FLOW, LACUNA_ENGINE_SYMMETRIC,
                          LACUNA_ENGINE_AUTO}) {
    o.engine = e;
    lacuna_poly* p = nullptr;
    REQUIRE(lacuna_poly_compute(g, &o, &p) == LACUNA_OK);
    CHECK(lacuna_poly_equal(p, expected));
    lacuna_poly_free(p);
  }
  CHECK(lacuna_resolve_engine(g, LACUNA_ENGINE_AUTO) == LACUNA_ENGINE_SYMMETRIC);
  CHECK(std::string(lacuna_engine_name(LACUNA_ENGINE_FLOW)) == "flow");

  o.engine = LACUNA_ENGINE_ORACLE;
  o.oracle_max_edges = 8;
  lacuna_poly* p = nullptr;
  CHECK(lacuna_poly_compute(g, &o, &p) == LACUNA_ERR_BUDGET);
  o.engine = LACUNA_ENGINE_FLOW;
  o.max_work = 10;
  CHECK(lacuna_poly_compute(g, &o, &p) == LACUNA_ERR_BUDGET);
  CHECK(p == nullptr);
  lacuna_poly_free(expected);
  lacuna_graph_free(g);

  const int path[] = {0, 1, 1, 2};
  REQUIRE(lacuna_graph_from_edges(3, path, 2, 0, &g) == LACUNA_OK);
  lacuna_options_init(&o);
  o.engine = LACUNA_ENGINE_SYMMETRIC;
  CHECK(lacuna_poly_compute(g, &o, &p) == LACUNA_ERR_PRECONDITION);
  CHECK(lacuna_resolve_engine(g, LACUNA_ENGINE_AUTO) == LACUNA_ENGINE_FLOW);
  lacuna_graph_free(g);
}

TEST_CASE("polynomial rendering and arithmetic") {
  lacuna_poly* p = poly_of({"1", "5", "11", "15"});
  CHECK(lacuna_poly_degree(p) == 3);
  char* s = nullptr;
  REQUIRE(lacuna_poly_to_text(p, &s) == LACUNA_OK);
  CHECK(take(s) == "1 + 5x + 11x^2 + 15x^3");
  REQUIRE(lacuna_poly_to_json(p, "K_{2,4}", &s) == LACUNA_OK);
  const std::string json = take(s);
  CHECK(json == R"({"graph":"K_{2,4}","coeffs":["1","5","11","15"]})");

  lacuna_poly* back = nullptr;
  REQUIRE(lacuna_poly_parse_json(json.c_str(), &back) == LACUNA_OK);
  CHECK(lacuna_poly_equal(p, back));
  lacuna_poly_free(back);
  CHECK(lacuna_poly_parse_json("{\"coeffs\":[1,", &back) == LACUNA_ERR_PARSE);

  REQUIRE(lacuna_poly_evaluate(p, "1", &s) == LACUNA_OK);
  CHECK(take(s) == "32");
  REQUIRE(lacuna_poly_evaluate(p, "-1", &s) == LACUNA_OK);
  CHECK(take(s) == "-8");
  REQUIRE(lacuna_poly_evaluate(p, "1/2", &s) == LACUNA_OK);
  CHECK(take(s) == "65/8");
  CHECK(lacuna_poly_evaluate(p, "half", &s) == LACUNA_ERR_PARSE);

  REQUIRE(lacuna_poly_reverse(p, 3, &s) == LACUNA_OK);
  CHECK(take(s) == "15,11,5,1");
  REQUIRE(lacuna_poly_reverse(p, 5, &s) == LACUNA_OK);
  CHECK(take(s) == "0,0,15,11,5,1");
  CHECK(lacuna_poly_reverse(p, 2, &s) != LACUNA_OK);

  REQUIRE(lacuna_poly_coefficient(p, 2, &s) == LACUNA_OK);
  CHECK(take(s) == "11");
  REQUIRE(lacuna_poly_coefficient(p, 40, &s) == LACUNA_OK);
  CHECK(take(s) == "0");
  lacuna_poly_free(p);

  lacuna_poly* list = nullptr;
  CHECK(lacuna_poly_parse_list("1,5,x", &list) == LACUNA_ERR_PARSE);
  CHECK(lacuna_last_error_column() == 5);
  REQUIRE(lacuna_poly_parse_list("1, 5,11,15", &list) == LACUNA_OK);
  CHECK(lacuna_poly_degree(list) == 3);
  lacuna_poly_free(list);

  lacuna_poly* closed = nullptr;
  REQUIRE(lacuna_poly_closed_form_2n(4, &closed) == LACUNA_OK);
  REQUIRE(lacuna_poly_to_text(closed, &s) == LACUNA_OK);
  CHECK(take(s) == "1 + 5x + 11x^2 + 15x^3");
  lacuna_poly_free(closed);
  REQUIRE(lacuna_poly_closed_form_m2(4, &closed) == LACUNA_OK);
  REQUIRE(lacuna_poly_to_text(closed, &s) == LACUNA_OK);
  CHECK(take(s) == "1 + 5x + 12x^2 + 20x^3");
  lacuna_poly_free(closed);
  CHECK(lacuna_poly_closed_form_2n(0, &closed) == LACUNA_ERR_INVALID_SPEC);

  const char* bad[] = {"1", "-"};
  CHECK(lacuna_poly_from_strings(bad, 2, &closed) == LACUNA_ERR_PARSE);
}

TEST_CASE("sequence verdicts") {
  lacuna_poly* p = poly_of({"1", "1", "2"});
  lacuna_verdict v;
  REQUIRE(lacuna_poly_log_concave(p, &v) == LACUNA_OK);
  CHECK(v.holds == 0);
  CHECK(v.has_witness == 1);
  CHECK(v.index == 1);
  REQUIRE(lacuna_poly_unimodal(p, &v) == LACUNA_OK);
  CHECK(v.holds == 1);
  lacuna_poly_free(p);

  p = poly_of({"1", "0", "1"});
  REQUIRE(lacuna_poly_log_concave(p, &v) == LACUNA_OK);
  CHECK(v.holds == 0);
  CHECK(v.internal_zero == 1);
  REQUIRE(lacuna_poly_unimodal(p, &v) == LACUNA_OK);
  CHECK(v.holds == 0);
  CHECK(v.index == 1);
  lacuna_poly_free(p);

  p = poly_of({"1", "-2"});
  CHECK(lacuna_poly_log_concave(p, &v) == LACUNA_ERR_PRECONDITION);
  lacuna_poly_free(p);
}

TEST_CASE("roots and sectors") {
  lacuna_poly* p = poly_of({"1", "5", "11", "15"});
  lacuna_roots* r = nullptr;
  REQUIRE(lacuna_roots_compute(p, 0.0, &r) == LACUNA_OK);
  REQUIRE(lacuna_roots_count(r) == 3);
  lacuna_root root;
  REQUIRE(lacuna_roots_get(r, 0, &root) == LACUNA_OK);
  CHECK(std::abs(root.re + 1.0 / 3.0) < 1e-10);
  CHECK(root.sector == LACUNA_SECTOR_INSIDE);
  REQUIRE(lacuna_roots_get(r, 2, &root) == LACUNA_OK);
  CHECK(std::abs(root.re + 0.2) < 1e-10);
  CHECK(std::abs(root.im - 0.4) < 1e-10);
  CHECK(root.sector == LACUNA_SECTOR_OUTSIDE);
  CHECK(lacuna_roots_get(r, 3, &root) == LACUNA_ERR_INVALID_ARGUMENT);
  lacuna_roots_free(r);
  lacuna_poly_free(p);

  p = poly_of({"7"});
  CHECK(lacuna_roots_compute(p, 0.0, &r) == LACUNA_ERR_PRECONDITION);
  lacuna_poly_free(p);
}

TEST_CASE("bounds report") {
  lacuna_bounds b;
  REQUIRE(lacuna_bounds_report(4, 2, "38", &b) == LACUNA_OK);
  CHECK(std::string(b.spanning_tree_count) == "32");
  CHECK(std::string(b.stable_count) == "128");
  CHECK(b.lower_ok == 1);
  CHECK(b.upper_ok == 1);
  CHECK(b.dominates == LACUNA_DOMINANCE_BELOW);
  lacuna_bounds_release(&b);
  CHECK(b.sto_count == nullptr);

  REQUIRE(lacuna_bounds_report(2, 3, "12", &b) == LACUNA_OK);
  CHECK(b.dominates == LACUNA_DOMINANCE_EQUAL);
  lacuna_bounds_release(&b);
  CHECK(lacuna_bounds_report(2, 3, "twelve", &b) == LACUNA_ERR_PARSE);
}

TEST_CASE("conjecture scan") {
  lacuna_options o;
  lacuna_options_init(&o);
  lacuna_scan* s = nullptr;
  REQUIRE(lacuna_scan_run(5, &o, &s) == LACUNA_OK);
  REQUIRE(lacuna_scan_size(s) == 3);
  lacuna_scan_cell cell;
  REQUIRE(lacuna_scan_get(s, 2, &cell) == LACUNA_OK);
  CHECK(cell.m == 3);
  CHECK(cell.n == 2);
  CHECK(cell.log_concave == 1);
  CHECK(cell.closed_form_checked == 1);
  CHECK(cell.closed_form_match == 1);
  CHECK(cell.violation == 0);
  lacuna_poly* p = nullptr;
  REQUIRE(lacuna_scan_polynomial(s, 2, &p) == LACUNA_OK);
  CHECK(lacuna_poly_degree(p) == 2);
  lacuna_poly_free(p);
  char* csv = nullptr;
  REQUIRE(lacuna_scan_to_csv(s, &csv) == LACUNA_OK);
  CHECK(take(csv) ==
        "m,n,degree,coeffs,log_concave,unimodal,sto_count,lower_bound,upper_bound,dominates\n"
        "2,2,1,\"[\"\"1\"\",\"\"3\"\"]\",true,true,4,4,8,equal\n"
        "2,3,2,\"[\"\"1\"\",\"\"4\"\",\"\"7\"\"]\",true,true,12,12,24,equal\n"
        "3,2,2,\"[\"\"1\"\",\"\"4\"\",\"\"8\"\"]\",true,true,13,12,36,below\n");
  lacuna_scan_free(s);

  REQUIRE(lacuna_scan_run(3, &o, &s) == LACUNA_OK);
  CHECK(lacuna_scan_size(s) == 0);
  lacuna_scan_free(s);
  CHECK(lacuna_scan_run(-1, &o, &s) != LACUNA_OK);
}

TEST_CASE("thread count does not change results") {
  lacuna_graph* g = bipartite(4, 4);
  lacuna_options o;
  lacuna_options_init(&o);
  o.engine = LACUNA_ENGINE_FLOW;
  std::string first;
  for (unsigned t : {1u, 2u, 3u}) {
    o.threads = t;
    lacuna_poly* p = nullptr;
    REQUIRE(lacuna_poly_compute(g, &o, &p) == LACUNA_OK);
    char* s = nullptr;
    REQUIRE(lacuna_poly_to_text(p, &s) == LACUNA_OK);
    const std::string text = take(s);
    if (first.empty()) first = text;
    CHECK(text == first);
    lacuna_poly_free(p);
  }
  lacuna_graph_free(g);
}
