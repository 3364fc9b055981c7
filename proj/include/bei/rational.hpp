#ifndef BEI_RATIONAL_HPP
#define BEI_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bei {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// n! for n >= 0.
BigInt factorial(unsigned n);

/// Smallest integer not below q.
BigInt ceil(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p" (decimal); throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

}  // namespace bei

#endif  // BEI_RATIONAL_HPP
