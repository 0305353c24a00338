#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wsets {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p", "p/q" or "-p/q" (ASCII minus). Denominator must be nonzero.
Rational parse_rational(const std::string& text);

// Canonical "p/q" form; integers render without the "/1".
std::string format_rational(const Rational& r);

// floor/ceil to BigInt.
BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

// Largest m (possibly negative) with 2^m <= q. Requires q > 0.
long floor_log2(const Rational& q);

// 2^m as an exact rational, m may be negative.
Rational pow2(long m);

}  // namespace wsets
