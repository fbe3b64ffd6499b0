#pragma once

#include "hermlat/numeric.hpp"

namespace hermlat {

// Exact real of the form  rat * pi^(pi_half/2) * D^(sqrtD_exp/2),
// with an optional extra log-scale factor for attached numeric data.
struct SymbolicReal {
    Rat rat = 0;
    int pi_half = 0;    // exponent of pi in half-units (pi_half/2 = power of pi)
    int sqrtD_exp = 0;  // exponent of D^(1/2)
    double log_aux = 0.0;  // log of an auxiliary numeric factor (0 when exact)

    SymbolicReal() = default;
    SymbolicReal(const Rat& r) : rat(r) {}
    SymbolicReal(const Rat& r, int pi_half_, int sqrtD_) : rat(r), pi_half(pi_half_), sqrtD_exp(sqrtD_) {}

    bool is_exact() const { return log_aux == 0.0; }
    bool pi_exp_integral() const { return pi_half % 2 == 0; }
    int pi_exp() const {
        if (!pi_exp_integral()) throw std::logic_error("SymbolicReal: half-integral pi exponent");
        return pi_half / 2;
    }

    friend SymbolicReal operator*(const SymbolicReal& x, const SymbolicReal& y) {
        SymbolicReal r;
        r.rat = x.rat * y.rat;
        r.pi_half = x.pi_half + y.pi_half;
        r.sqrtD_exp = x.sqrtD_exp + y.sqrtD_exp;
        r.log_aux = x.log_aux + y.log_aux;
        return r;
    }
    friend SymbolicReal operator/(const SymbolicReal& x, const SymbolicReal& y) {
        if (y.rat == 0) throw std::domain_error("SymbolicReal: division by zero");
        SymbolicReal r;
        r.rat = x.rat / y.rat;
        r.pi_half = x.pi_half - y.pi_half;
        r.sqrtD_exp = x.sqrtD_exp - y.sqrtD_exp;
        r.log_aux = x.log_aux - y.log_aux;
        return r;
    }
    friend bool operator==(const SymbolicReal& x, const SymbolicReal& y) {
        return x.rat == y.rat && x.pi_half == y.pi_half && x.sqrtD_exp == y.sqrtD_exp &&
               x.log_aux == y.log_aux;
    }

    SymbolicReal pow(int e) const;
    double evaluate(long D) const;
    std::string str() const;
};

// Gamma_R(s) = pi^(-s/2) Gamma(s/2); exact for any integer s >= 1 (odd s carry
// a half-integral pi exponent). Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).
SymbolicReal gamma_R(int s);
SymbolicReal gamma_C(int s);

}  // namespace hermlat
