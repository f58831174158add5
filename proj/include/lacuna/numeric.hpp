#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lacuna {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Row n of Pascal's triangle, C(n,0) .. C(n,n).
std::vector<BigInt> binomial_row(unsigned n);

// (sum of multiplicities)! / prod(multiplicity!).
BigInt multinomial(std::span<const unsigned> multiplicities);

BigInt power(std::uint64_t base, unsigned exponent);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace lacuna
