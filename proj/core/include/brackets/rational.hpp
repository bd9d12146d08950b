#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "brackets/errors.hpp"

namespace brackets {

// Exact rational scalar. cpp_rational keeps the value reduced with a
// positive denominator, which is exactly the invariant the linear solver
// relies on.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
    BigInt q = rational_num(r) / rational_den(r);
    if (r < 0 && q * rational_den(r) != rational_num(r)) --q;
    return q;
}

Rational pow_rational(const Rational& base, long long exp);

// Accepts "3", "-7/4", "2.5" (decimals are exact: 2.5 -> 5/2).
Rational parse_rational(const std::string& text);

std::string render_rational(const Rational& r);

} // namespace brackets
