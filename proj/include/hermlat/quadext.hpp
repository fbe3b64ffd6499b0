#pragma once

#include "hermlat/numeric.hpp"

namespace hermlat {

// Element a + b*sqrt(r) of Q(sqrt r), r a fixed positive square-free integer.
// Values with b == 0 are treated as plain rationals and mix with any radicand.
struct QuadExt {
    Rat a;
    Rat b;
    long rad = 0;  // 0 while the value is rational and no radicand is pinned

    QuadExt() : a(0), b(0) {}
    QuadExt(long v) : a(v), b(0) {}
    QuadExt(const Rat& v) : a(v), b(0) {}
    QuadExt(const Rat& a_, const Rat& b_, long rad_) : a(a_), b(b_), rad(b_ == 0 ? 0 : rad_) {
        if (b != 0 && rad <= 0) throw std::invalid_argument("QuadExt: radicand must be positive");
    }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    static long join(long r1, long r2) {
        if (r1 == 0) return r2;
        if (r2 == 0) return r1;
        if (r1 != r2) throw std::invalid_argument("QuadExt: mixed radicands");
        return r1;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a + y.a, x.b + y.b, join(x.rad, y.rad));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a - y.a, x.b - y.b, join(x.rad, y.rad));
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.rad); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long r = join(x.rad, y.rad);
        Rat rr = (r == 0) ? Rat(0) : Rat(r);
        return QuadExt(x.a * y.a + rr * x.b * y.b, x.a * y.b + x.b * y.a, r);
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    QuadExt inverse() const {
        if (is_zero()) throw std::domain_error("QuadExt: 1/0");
        if (b == 0) return QuadExt(Rat(1) / a);
        Rat n = a * a - Rat(rad) * b * b;  // nonzero: sqrt(rad) irrational
        return QuadExt(a / n, -b / n, rad);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // p^(k/2) as an element of Q(sqrt p)
    static QuadExt half_power(long p, long k) {
        if (k % 2 == 0) return QuadExt(rat_pow(Rat(p), k / 2));
        return QuadExt(Rat(0), rat_pow(Rat(p), (k - 1) / 2), p);  // k-1 even, division exact
    }

    QuadExt pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadExt r(1), x = *this;
        while (e > 0) {
            if (e & 1) r *= x;
            x *= x;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        if (b == 0) return rat_str(a);
        std::string s = rat_str(a) + "+" + rat_str(b) + "*sqrt(" + std::to_string(rad) + ")";
        return s;
    }

    double to_double(double sqrt_rad) const;
};

}  // namespace hermlat
