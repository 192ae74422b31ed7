#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace repint {

// Universal exact scalar: arbitrary-precision rational, always reduced,
// denominator > 0 (both guaranteed by the backend).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// q^e for integer e of either sign.
inline Rat rat_pow(const Rat& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("rat_pow: zero to negative power");
        return rat_pow(Rat(1) / q, -e);
    }
    Rat r = 1, base = q;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::string num_str(const Rat& q) { return numerator(q).str(); }
inline std::string den_str(const Rat& q) { return denominator(q).str(); }

// "3/4", "-2", "0" — compact human form.
inline std::string rat_str(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace repint
