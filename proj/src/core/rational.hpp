#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace equicolor {

// Exact arithmetic for edge budgets and weight sums. Weight denominators are
// least common multiples of per-vertex neighbour counts, which overflow any
// fixed-width integer long before the instance sizes we care about, hence the
// arbitrary-precision backing.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat make_rat(long long num, long long den = 1) {
    return Rat(BigInt(num), BigInt(den));
}

inline std::string rat_to_string(const Rat& q) {
    std::string s = q.numerator().str();
    if (q.denominator() != 1) {
        s += "/";
        s += q.denominator().str();
    }
    return s;
}

// Largest integer <= q.
inline BigInt rat_floor(const Rat& q) {
    BigInt quot = q.numerator() / q.denominator();
    if (q.numerator() < 0 && quot * q.denominator() != q.numerator()) {
        quot -= 1;
    }
    return quot;
}

} // namespace equicolor
