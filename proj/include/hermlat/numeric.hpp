#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hermlat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct check_error : std::runtime_error {
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(Int b, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e >= 0) {
        Rat r = 1;
        for (long i = 0; i < e; ++i) r *= b;
        return r;
    }
    if (b == 0) throw std::domain_error("rat_pow: 1/0");
    Rat inv = Rat(denominator(b), numerator(b));
    Rat r = 1;
    for (long i = 0; i < -e; ++i) r *= inv;
    return r;
}

// p-adic valuation; v(0) is reported as a large sentinel.
inline long ord_p(Int n, long p) {
    if (n == 0) return 1 << 28;
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline long ord_p(const Rat& x, long p) {
    if (x == 0) return 1 << 28;
    return ord_p(numerator(x), p) - ord_p(denominator(x), p);
}

inline std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace hermlat
