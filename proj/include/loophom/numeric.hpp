#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace loophom {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

inline bool is_integral(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

/// Renders "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q"; throws Error(InvalidArgument) on malformed text.
Rational parse_rational(const std::string& text);

std::int64_t gcd_of(const IntVector& v);

/// Exact determinant via fraction-free elimination.
Integer determinant(const IntMatrix& m);

} // namespace loophom
