#include "lacuna/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "lacuna/configuration.hpp"
#include "lacuna/error.hpp"

namespace lacuna {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kLoopEdge: return "loop-edge";
    case ErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ErrorKind::kDisconnected: return "disconnected";
    case ErrorKind::kBadSink: return "bad-sink";
    case ErrorKind::kBadVertex: return "bad-vertex";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kUnstable: return "unstable";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kSizeCap: return "size-cap";
    case ErrorKind::kNoConvergence: return "no-convergence";
  }
  return "unknown";
}

Graph Graph::from_edge_list(int vertex_count,
                            const std::vector<std::pair<int, int>>& pairs,
                            Vertex sink) {
  if (vertex_count < 1) {
    throw Error(ErrorKind::kInvalidSpec, "graph needs at least one vertex");
  }
  if (sink < 0 || sink >= vertex_count) {
    throw Error(ErrorKind::kBadSink, "sink " + std::to_string(sink) +
                                         " is not a vertex of a " +
                                         std::to_string(vertex_count) +
                                         "-vertex graph");
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.sink_ = sink;
  g.degrees_.assign(static_cast<std::size_t>(vertex_count), 0);
  g.incident_.resize(static_cast<std::size_t>(vertex_count));
  g.edges_.reserve(pairs.size());

  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw Error(ErrorKind::kBadVertex, "edge (" + std::to_string(u) + "," +
                                             std::to_string(v) +
                                             ") references a missing vertex");
    }
    if (u == v) {
      throw Error(ErrorKind::kLoopEdge,
                  "loop edge at vertex " + std::to_string(u));
    }
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert({e.low, e.high}).second) {
      throw Error(ErrorKind::kDuplicateEdge, "duplicate edge (" +
                                                 std::to_string(e.low) + "," +
                                                 std::to_string(e.high) + ")");
    }
    const std::size_t index = g.edges_.size();
    g.edges_.push_back(e);
    ++g.degrees_[static_cast<std::size_t>(e.low)];
    ++g.degrees_[static_cast<std::size_t>(e.high)];
    g.incident_[static_cast<std::size_t>(e.low)].push_back(index);
    g.incident_[static_cast<std::size_t>(e.high)].push_back(index);
  }

  // Connectivity by DFS from the sink.
  std::vector<char> reached(static_cast<std::size_t>(vertex_count), 0);
  std::vector<Vertex> stack{sink};
  reached[static_cast<std::size_t>(sink)] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (std::size_t ei : g.incident_[static_cast<std::size_t>(v)]) {
      const Edge& e = g.edges_[ei];
      const Vertex w = e.low == v ? e.high : e.low;
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  if (visited != vertex_count) {
    throw Error(ErrorKind::kDisconnected,
                "graph is disconnected: " + std::to_string(vertex_count - visited) +
                    " vertices unreachable from the sink");
  }

  g.slot_.assign(static_cast<std::size_t>(vertex_count), -1);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (v == sink) continue;
    g.slot_[static_cast<std::size_t>(v)] = static_cast<int>(g.non_sink_.size());
    g.non_sink_.push_back(v);
    g.slot_degree_.push_back(g.degrees_[static_cast<std::size_t>(v)]);
  }
  return g;
}

Graph make_complete_bipartite(BipartiteSpec spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw Error(ErrorKind::kInvalidSpec,
                "complete bipartite parts must be nonempty (got m=" +
                    std::to_string(spec.m) + ", n=" + std::to_string(spec.n) + ")");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(spec.m) * static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.m; ++i) {
    for (int j = 0; j < spec.n; ++j) pairs.emplace_back(i, spec.m + j);
  }
  return Graph::from_edge_list(spec.m + spec.n, pairs, 0);
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

int cycle_rank(const Graph& g) {
  return static_cast<int>(g.edge_count()) - g.vertex_count() + 1;
}

namespace {

// Splits on whitespace; records the line of each token.
struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++column;
      ++i;
      continue;
    }
    Token t{{}, line, column};
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\r' && text[i] != '\n') {
      t.text.push_back(text[i]);
      ++i;
      ++column;
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

long parse_index(const Token& t, const char* what) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("line " + std::to_string(t.line) + ": expected " + what +
                         ", got '" + t.text + "'",
                     t.line, t.column);
  }
  return std::stol(t.text);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 3) {
    const std::size_t line = tokens.empty() ? 1 : tokens.back().line;
    throw ParseError("line " + std::to_string(line) +
                         ": header must be \"V E S\"",
                     line, 0);
  }
  for (std::size_t k = 1; k < 3; ++k) {
    if (tokens[k].line != tokens[0].line) {
      throw ParseError("line " + std::to_string(tokens[0].line) +
                           ": header must be \"V E S\" on one line",
                       tokens[0].line, 0);
    }
  }
  const long vertices = parse_index(tokens[0], "vertex count");
  const long edges = parse_index(tokens[1], "edge count");
  const long sink = parse_index(tokens[2], "sink index");

  std::vector<std::pair<int, int>> pairs;
  std::size_t k = 3;
  for (long e = 0; e < edges; ++e) {
    if (k + 1 >= tokens.size()) {
      const std::size_t line = k < tokens.size() ? tokens[k].line : tokens.back().line + 1;
      throw ParseError("line " + std::to_string(line) + ": expected " +
                           std::to_string(edges) + " edges, found " +
                           std::to_string(e),
                       line, 0);
    }
    const Token& a = tokens[k];
    const Token& b = tokens[k + 1];
    if (a.line != b.line) {
      throw ParseError("line " + std::to_string(a.line) +
                           ": edge line must hold two vertex indices",
                       a.line, 0);
    }
    if (a.line == tokens[0].line) {
      throw ParseError("line " + std::to_string(a.line) +
                           ": trailing tokens after header",
                       a.line, a.column);
    }
    if (k + 2 < tokens.size() && tokens[k + 2].line == a.line) {
      throw ParseError("line " + std::to_string(a.line) +
                           ": too many tokens on edge line",
                       a.line, tokens[k + 2].column);
    }
    const long u = parse_index(a, "vertex index");
    const long v = parse_index(b, "vertex index");
    if (u >= vertices || v >= vertices) {
      throw ParseError("line " + std::to_string(a.line) + ": vertex index out of range",
                       a.line, u >= vertices ? a.column : b.column);
    }
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    k += 2;
  }
  if (k < tokens.size()) {
    throw ParseError("line " + std::to_string(tokens[k].line) +
                         ": unexpected content after " + std::to_string(edges) +
                         " edges",
                     tokens[k].line, tokens[k].column);
  }
  return Graph::from_edge_list(static_cast<int>(vertices), pairs,
                               static_cast<Vertex>(sink));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'", 0, 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.sink() << '\n';
  for (const Edge& e : g.edges()) out << e.low << ' ' << e.high << '\n';
  return out.str();
}

// configuration.hpp

bool is_stable(const Graph& g, const Configuration& c) {
  if (c.grains.size() != g.non_sink_count()) return false;
  const auto& deg = g.slot_degrees();
  for (std::size_t i = 0; i < c.grains.size(); ++i) {
    if (c.grains[i] < 0 || c.grains[i] >= deg[i]) return false;
  }
  return true;
}

void require_stable(const Graph& g, const Configuration& c) {
  if (c.grains.size() != g.non_sink_count()) {
    throw Error(ErrorKind::kUnstable,
                "configuration has " + std::to_string(c.grains.size()) +
                    " entries, graph has " + std::to_string(g.non_sink_count()) +
                    " non-sink vertices");
  }
  if (!is_stable(g, c)) {
    throw Error(ErrorKind::kUnstable, "configuration is not stable");
  }
}

MixedRadix::MixedRadix(const Graph& g) : radices_(g.slot_degrees()) {
  weights_.assign(radices_.size(), 1);
  for (std::size_t i = radices_.size(); i-- > 0;) {
    weights_[i] = size_;
    size_ *= static_cast<std::uint64_t>(radices_[i]);
  }
}

std::uint64_t MixedRadix::encode(std::span<const int> grains) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < grains.size(); ++i) {
    code += static_cast<std::uint64_t>(grains[i]) * weights_[i];
  }
  return code;
}

void MixedRadix::decode(std::uint64_t code, std::span<int> grains) const {
  for (std::size_t i = 0; i < grains.size(); ++i) {
    grains[i] = static_cast<int>(code / weights_[i]);
    code %= weights_[i];
  }
}

std::uint64_t stable_count(const Graph& g) {
  std::uint64_t total = 1;
  for (int d : g.slot_degrees()) {
    const auto du = static_cast<std::uint64_t>(d);
    if (du != 0 && total > std::numeric_limits<std::uint64_t>::max() / du) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= du;
  }
  return total;
}

}  // namespace lacuna
