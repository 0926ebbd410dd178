#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lform {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a,b) >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = x2;
        y1 = y2;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    return {a, x0, y0};
}

inline bool is_even_int(const Int& a) { return (a & 1) == 0; }

inline std::string to_string(const Int& a) { return a.str(); }

} // namespace lform
