#include "hermlat/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hermlat {

const char* var_name(int v) {
    static const char* names[kNumVars] = {"t", "X", "Y", "u", "q", "U", "Q"};
    return names[v];
}

void LaurentPoly::add_term(const ExpKey& k, const QuadExt& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            ExpKey k;
            for (int i = 0; i < kNumVars; ++i) k[i] = ka[i] + kb[i];
            r.add_term(k, ca * cb);
        }
    return r;
}

int LaurentPoly::degree(Var v) const {
    int d = 0;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (first || k[v] > d) d = k[v];
        first = false;
    }
    return d;
}

int LaurentPoly::low_degree(Var v) const {
    int d = 0;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (first || k[v] < d) d = k[v];
        first = false;
    }
    return d;
}

LaurentPoly LaurentPoly::subst_monomial(Var v, const QuadExt& c, const ExpKey& mono) const {
    LaurentPoly r;
    for (const auto& [k, coef] : terms) {
        int e = k[v];
        ExpKey nk = k;
        nk[v] = 0;
        for (int i = 0; i < kNumVars; ++i) nk[i] += e * mono[i];
        r.add_term(nk, coef * c.pow(e));
    }
    return r;
}

LaurentPoly LaurentPoly::subst_scaled_var(Var v, const QuadExt& c, Var w, int e0) const {
    ExpKey mono{};
    mono[w] = e0;
    return subst_monomial(v, c, mono);
}

LaurentPoly LaurentPoly::subst_value(Var v, const QuadExt& value) const {
    LaurentPoly r;
    for (const auto& [k, coef] : terms) {
        ExpKey nk = k;
        nk[v] = 0;
        r.add_term(nk, coef * value.pow(k[v]));
    }
    return r;
}

LaurentPoly LaurentPoly::invert_var(Var v) const {
    LaurentPoly r;
    for (const auto& [k, coef] : terms) {
        ExpKey nk = k;
        nk[v] = -nk[v];
        r.add_term(nk, coef);
    }
    return r;
}

LaurentPoly LaurentPoly::negate_var(Var v) const {
    LaurentPoly r;
    for (const auto& [k, coef] : terms) {
        QuadExt c = (k[v] % 2 == 0) ? coef : -coef;
        r.add_term(k, c);
    }
    return r;
}

LaurentPoly LaurentPoly::truncate_above(Var v, int bound) const {
    LaurentPoly r;
    for (const auto& [k, coef] : terms)
        if (k[v] <= bound) r.add_term(k, coef);
    return r;
}

LaurentPoly LaurentPoly::coeff_of(Var v, int e) const {
    LaurentPoly r;
    for (const auto& [k, coef] : terms)
        if (k[v] == e) {
            ExpKey nk = k;
            nk[v] = 0;
            r.add_term(nk, coef);
        }
    return r;
}

LaurentPoly poly_pow(const LaurentPoly& b, long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    LaurentPoly r(1), x = b;
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

namespace {
// sort key (t, X, Y, u, q, U, Q): map order already does this since Vt < VX < VY...
std::string monomial_str(const ExpKey& k) {
    // print order per fixture format: X, Y, t first, then the rest
    static const int order[kNumVars] = {VX, VY, Vt, Vu, Vq, VU, VQ};
    std::string s;
    for (int idx : order) {
        if (k[idx] == 0) continue;
        s += " ";
        s += var_name(idx);
        if (k[idx] != 1) s += "^" + std::to_string(k[idx]);
    }
    return s;
}
}  // namespace

std::string LaurentPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << " *" << monomial_str(k);
        if (k == ExpKey{}) os << " 1";
    }
    return os.str();
}

TruncatedSeries TruncatedSeries::inverse() const {
    LaurentPoly c0 = poly.coeff_of(Vt, 0);
    if (c0.terms.size() != 1)
        throw std::domain_error("TruncatedSeries::inverse: t^0 coefficient is not a monomial");
    ExpKey mk = c0.terms.begin()->first;
    QuadExt mc = c0.terms.begin()->second;
    ExpKey imk;
    for (int i = 0; i < kNumVars; ++i) imk[i] = -mk[i];
    LaurentPoly g0;
    g0.add_term(imk, mc.inverse());

    std::vector<LaurentPoly> f(order + 1), g(order + 1);
    for (int i = 0; i <= order; ++i) f[i] = poly.coeff_of(Vt, i);
    g[0] = g0;
    for (int n = 1; n <= order; ++n) {
        LaurentPoly acc;
        for (int i = 1; i <= n; ++i) acc += f[i] * g[n - i];
        g[n] = -(g0 * acc);
    }
    LaurentPoly res;
    for (int n = 0; n <= order; ++n) {
        ExpKey tk{};
        tk[Vt] = n;
        LaurentPoly tn;
        tn.add_term(tk, QuadExt(1));
        res += tn * g[n];
    }
    return TruncatedSeries(res, order);
}

int first_mismatch_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order, b.order);
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return -1;
}

}  // namespace hermlat
