#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// C(n, r) with the out-of-range convention C(n, r) = 0 for n < r or r < 0
inline BigInt binomial(int n, int r) {
    if (r < 0 || n < 0 || n < r) return 0;
    r = std::min(r, n - r);
    BigInt c = 1;
    for (int i = 0; i < r; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

// "num/den" with a plain decimal rendering alongside, for reports
inline std::string rational_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cdl
