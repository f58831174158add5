#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lacuna/graph.hpp"
#include "lacuna/numeric.hpp"
#include "lacuna/recurrence.hpp"

namespace lacuna {

// Integer polynomial sum_k coeffs[k] x^k, trailing zeros trimmed. The zero
// polynomial has no coefficients.
class LackingPolynomial {
 public:
  LackingPolynomial() = default;
  explicit LackingPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t k) const;

  // "1 + 5x + 15x^2"; "0" for the zero polynomial.
  std::string to_text() const;
  // {"graph": "<label>", "coeffs": ["1","5","15"]}
  std::string to_json(std::string_view graph_label) const;
  static LackingPolynomial from_json(std::string_view json);

  friend bool operator==(const LackingPolynomial&, const LackingPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

LackingPolynomial from_histogram(const LevelHistogram& histogram);

enum class Engine { kOracle, kFlow, kSymmetric };

const char* to_string(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name);

struct PolynomialOptions {
  Engine engine = Engine::kFlow;
  EngineOptions limits;
  std::size_t oracle_max_edges = 24;
};

LackingPolynomial lacking_polynomial(const Graph& g,
                                     const PolynomialOptions& options = {});
// Uses the symmetric engine unless options.engine says otherwise.
LackingPolynomial lacking_polynomial(BipartiteSpec spec,
                                     const PolynomialOptions& options);

// sum_{k<n} T(n,k) x^k with T(n,k) = sum_{i<=k} C(n,i).
LackingPolynomial closed_form_2n(int n);
// sum_{k<m} S(m-1,k) x^k with S(m-1,k) = sum_{q<=k} sum_{r<=q} C(m-1,r).
LackingPolynomial closed_form_m2(int m);

// Entry j is coefficient(top_degree - j); length top_degree + 1.
std::vector<BigInt> reverse_coefficients(const LackingPolynomial& p,
                                         int top_degree);

BigInt evaluate(const LackingPolynomial& p, const BigInt& point);
BigRational evaluate(const LackingPolynomial& p, const BigRational& point);

// Comma-separated decimal integers, e.g. "1,5,11,15". Whitespace around
// entries is allowed. Throws ParseError with the 1-based column on failure.
std::vector<BigInt> parse_coefficient_list(std::string_view text);

}  // namespace lacuna
