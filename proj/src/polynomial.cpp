#include "lacuna/polynomial.hpp"

#include <json.hpp>

#include <sstream>

#include "lacuna/error.hpp"
#include "lacuna/orientation.hpp"

namespace lacuna {

std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row{1};
  row.reserve(n + 1);
  for (unsigned k = 1; k <= n; ++k) {
    // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at every step.
    row.push_back(row.back() * (n - k + 1) / k);
  }
  return row;
}

BigInt multinomial(std::span<const unsigned> multiplicities) {
  BigInt result = 1;
  unsigned placed = 0;
  for (unsigned part : multiplicities) {
    // Multiply by C(placed + part, part) incrementally.
    for (unsigned j = 1; j <= part; ++j) {
      ++placed;
      result = result * placed / j;
    }
  }
  return result;
}

BigInt power(std::uint64_t base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

LackingPolynomial::LackingPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LackingPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

std::string LackingPolynomial::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += magnitude.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string LackingPolynomial::to_json(std::string_view graph_label) const {
  nlohmann::ordered_json j;
  j["graph"] = std::string(graph_label);
  auto coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j.dump();
}

LackingPolynomial LackingPolynomial::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw ParseError("polynomial JSON needs a \"coeffs\" array", 1, 0);
  }
  std::vector<BigInt> coeffs;
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_string()) {
      throw ParseError("coefficients must be decimal strings", 1, 0);
    }
    const auto values = parse_coefficient_list(entry.get<std::string>());
    if (values.size() != 1) throw ParseError("bad coefficient string", 1, 0);
    coeffs.push_back(values.front());
  }
  return LackingPolynomial(std::move(coeffs));
}

LackingPolynomial from_histogram(const LevelHistogram& histogram) {
  return LackingPolynomial(histogram.counts);
}

const char* to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::kOracle: return "oracle";
    case Engine::kFlow: return "flow";
    case Engine::kSymmetric: return "symmetric";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "oracle") return Engine::kOracle;
  if (name == "flow") return Engine::kFlow;
  if (name == "symmetric") return Engine::kSymmetric;
  return std::nullopt;
}

namespace {

LackingPolynomial from_members(const Graph& g, const std::vector<Configuration>& members) {
  std::vector<BigInt> counts(static_cast<std::size_t>(max_level(g)) + 1, 0);
  for (const auto& c : members) counts[static_cast<std::size_t>(level(g, c))] += 1;
  return LackingPolynomial(std::move(counts));
}

}  // namespace

LackingPolynomial lacking_polynomial(const Graph& g, const PolynomialOptions& options) {
  switch (options.engine) {
    case Engine::kOracle: {
      OracleOptions oracle;
      oracle.max_edges = options.oracle_max_edges;
      oracle.threads = options.limits.threads;
      return from_members(g, sto_by_union(g, oracle));
    }
    case Engine::kFlow:
      return from_histogram(sto_fast(g, options.limits).histogram);
    case Engine::kSymmetric:
      throw Error(ErrorKind::kPrecondition,
                  "symmetric engine needs a complete bipartite specification");
  }
  return {};
}

LackingPolynomial lacking_polynomial(BipartiteSpec spec, const PolynomialOptions& options) {
  if (options.engine == Engine::kSymmetric) {
    return from_histogram(sto_bipartite_symmetric(spec, options.limits));
  }
  return lacking_polynomial(make_complete_bipartite(spec), options);
}

LackingPolynomial closed_form_2n(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidSpec, "closed form for K_{2,n} needs n >= 1");
  const auto row = binomial_row(static_cast<unsigned>(n));
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  BigInt running = 0;
  for (int k = 0; k < n; ++k) {
    running += row[static_cast<std::size_t>(k)];
    coeffs.push_back(running);
  }
  return LackingPolynomial(std::move(coeffs));
}

LackingPolynomial closed_form_m2(int m) {
  if (m < 1) throw Error(ErrorKind::kInvalidSpec, "closed form for K_{m,2} needs m >= 1");
  const auto row = binomial_row(static_cast<unsigned>(m - 1));
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m));
  BigInt inner = 0;  // R(m-1, k)
  BigInt outer = 0;  // S(m-1, k)
  for (int k = 0; k < m; ++k) {
    inner += row[static_cast<std::size_t>(k)];
    outer += inner;
    coeffs.push_back(outer);
  }
  return LackingPolynomial(std::move(coeffs));
}

std::vector<BigInt> reverse_coefficients(const LackingPolynomial& p, int top_degree) {
  if (top_degree < p.degree()) {
    throw Error(ErrorKind::kPrecondition, "top degree " + std::to_string(top_degree) +
                                              " is below the polynomial degree " +
                                              std::to_string(p.degree()));
  }
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(top_degree) + 1);
  for (int j = 0; j <= top_degree; ++j) {
    out.push_back(p.coefficient(static_cast<std::size_t>(top_degree - j)));
  }
  return out;
}

BigInt evaluate(const LackingPolynomial& p, const BigInt& point) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * point + c[k];
  return acc;
}

BigRational evaluate(const LackingPolynomial& p, const BigRational& point) {
  BigRational acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * point + BigRational(c[k]);
  return acc;
}

std::vector<BigInt> parse_coefficient_list(std::string_view text) {
  std::vector<BigInt> values;
  std::size_t i = 0;
  auto fail = [](const std::string& what, std::size_t position) -> ParseError {
    return ParseError(what + " at position " + std::to_string(position + 1), 1, position + 1);
  };
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  while (true) {
    skip_space();
    const std::size_t start = i;
    std::string digits;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') digits.push_back('-');
      ++i;
    }
    const std::size_t digit_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits.push_back(text[i++]);
    if (i == digit_start) {
      throw fail(i < text.size() ? std::string("expected digit, found '") + text[i] + "'"
                                 : std::string("expected digit, found end of input"),
                 i < text.size() ? i : start);
    }
    values.emplace_back(digits);
    skip_space();
    if (i == text.size()) break;
    if (text[i] != ',') throw fail(std::string("expected ',', found '") + text[i] + "'", i);
    ++i;
  }
  return values;
}

}  // namespace lacuna
