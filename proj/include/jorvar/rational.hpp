#pragma once

#include "jorvar/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace jorvar {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always normalized: gcd(|num|,den)=1, den>0, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0)
        throw Error("rational with zero denominator");
    if (den < 0) { // the backend insists on positive denominators
        num = -num;
        den = -den;
    }
    return Rat(Int(num), Int(den));
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

std::string to_string(const Rat& r);

// Parses "p", "-p" or "p/q" with arbitrary-precision parts.
Rat parse_rat(const std::string& text);

// Exact integer square root if n is a perfect square.
std::optional<Int> int_sqrt_exact(const Int& n);

// Exact square root of a nonnegative rational, when it is rational.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

} // namespace jorvar
