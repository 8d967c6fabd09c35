#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace retrieval {

// All expectations, harmonic numbers and bound values are exact rationals.
// Boost.Multiprecision keeps them normalized (lowest terms, positive denominator).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact big integer; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// H_r = sum_{i=1}^r 1/i, with H_0 = 0.
Rational harmonic(std::uint64_t r);

/// Serialized form used in JSON: "num/den", or just "num" when integral.
std::string to_fraction_string(const Rational& r);

/// Parse "num/den" or "num".
Rational from_fraction_string(const std::string& s);

/// Decimal rendering with round-half-even at `significant` digits.
/// Display only; never fed back into exact computations.
std::string to_decimal_string(const Rational& r, int significant = 15);

double to_double(const Rational& r);

}  // namespace retrieval
