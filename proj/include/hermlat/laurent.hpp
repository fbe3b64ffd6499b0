#pragma once

#include <array>
#include <map>
#include <vector>

#include "hermlat/quadext.hpp"

namespace hermlat {

// Variable slots for Laurent polynomials. Fixed universe; unused slots stay 0.
enum Var : int { Vt = 0, VX = 1, VY = 2, Vu = 3, Vq = 4, VU = 5, VQ = 6 };
constexpr int kNumVars = 7;
const char* var_name(int v);

using ExpKey = std::array<int, kNumVars>;

// Sparse multivariate Laurent polynomial over Q(sqrt p) (or plain Q).
// Exponents may be negative in any variable.
struct LaurentPoly {
    std::map<ExpKey, QuadExt> terms;

    LaurentPoly() = default;
    LaurentPoly(const QuadExt& c) {
        if (!c.is_zero()) terms[ExpKey{}] = c;
    }
    LaurentPoly(long c) : LaurentPoly(QuadExt(c)) {}
    LaurentPoly(const Rat& c) : LaurentPoly(QuadExt(c)) {}

    static LaurentPoly variable(Var v, int e = 1, const QuadExt& c = QuadExt(1)) {
        LaurentPoly r;
        if (c.is_zero()) return r;
        ExpKey k{};
        k[v] = e;
        r.terms[k] = c;
        return r;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == ExpKey{});
    }
    QuadExt constant_value() const {
        if (terms.empty()) return QuadExt(0);
        if (!is_constant()) throw std::logic_error("LaurentPoly: not constant");
        return terms.begin()->second;
    }

    void add_term(const ExpKey& k, const QuadExt& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(QuadExt(-1)) * a; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    int degree(Var v) const;    // max exponent of v (0 for zero poly)
    int low_degree(Var v) const;  // min exponent of v

    // substitute v -> c * (monomial given by key); exponent e becomes c^e * mono^e
    LaurentPoly subst_monomial(Var v, const QuadExt& c, const ExpKey& mono) const;
    // substitute v -> c * w^e0
    LaurentPoly subst_scaled_var(Var v, const QuadExt& c, Var w, int e0 = 1) const;
    // substitute v -> value (value must be invertible if negative exponents occur)
    LaurentPoly subst_value(Var v, const QuadExt& value) const;
    // v -> v^-1
    LaurentPoly invert_var(Var v) const;
    // v -> -v
    LaurentPoly negate_var(Var v) const;
    // drop all terms with exponent of v above bound
    LaurentPoly truncate_above(Var v, int bound) const;
    // coefficient of v^e, as a poly in the remaining variables
    LaurentPoly coeff_of(Var v, int e) const;

    // canonical fixture text: terms sorted lexicographically on (t, X, Y, ...)
    std::string str() const;
};

LaurentPoly poly_pow(const LaurentPoly& b, long e);

// Power series in t truncated at t-order `order`; coefficients are Laurent
// polynomials in the other variables. Negative t-exponents are not allowed.
struct TruncatedSeries {
    LaurentPoly poly;
    int order = 0;

    TruncatedSeries() = default;
    TruncatedSeries(const LaurentPoly& p, int n) : poly(p.truncate_above(Vt, n)), order(n) {
        if (poly.low_degree(Vt) < 0) throw std::invalid_argument("TruncatedSeries: negative t power");
    }
    static TruncatedSeries one(int n) { return TruncatedSeries(LaurentPoly(1), n); }

    LaurentPoly coeff(int i) const { return poly.coeff_of(Vt, i); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order, b.order);
        return TruncatedSeries(a.poly.truncate_above(Vt, n) + b.poly.truncate_above(Vt, n), n);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order, b.order);
        return TruncatedSeries(a.poly.truncate_above(Vt, n) - b.poly.truncate_above(Vt, n), n);
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order, b.order);
        return TruncatedSeries((a.poly * b.poly).truncate_above(Vt, n), n);
    }

    // multiplicative inverse; the t^0 coefficient must be an invertible monomial
    TruncatedSeries inverse() const;
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a * b.inverse();
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order, b.order);
        return a.poly.truncate_above(Vt, n) == b.poly.truncate_above(Vt, n);
    }
};

// first t-order where a and b differ, or -1 if equal through min(order)
int first_mismatch_order(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace hermlat
