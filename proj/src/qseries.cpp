#include "hermlat/qseries.hpp"

namespace hermlat {

LaurentPoly pochhammer(Var u_var, Var q_var, int m) {
    if (m < 0) throw std::invalid_argument("pochhammer: m >= 0 required");
    LaurentPoly r(1);
    for (int i = 1; i <= m; ++i) {
        ExpKey k{};
        k[q_var] += i - 1;
        k[u_var] += 1;
        LaurentPoly f(1);
        f.add_term(k, QuadExt(-1));
        r *= f;
    }
    return r;
}

LaurentPoly phi_poly(Var q_var, int m) {
    LaurentPoly r(1);
    for (int i = 1; i <= m; ++i) {
        ExpKey k{};
        k[q_var] = i;
        LaurentPoly f(1);
        f.add_term(k, QuadExt(-1));
        r *= f;
    }
    return r;
}

Rat phi_rat(const Rat& q, int m) {
    Rat r = 1;
    Rat qe = 1;
    for (int i = 1; i <= m; ++i) {
        qe *= q;
        r *= (1 - qe);
    }
    return r;
}

Rat phi_mp(const Rat& q, Splitting sp, int m) {
    switch (sp) {
        case Splitting::Inert: return phi_rat(q * q, m);
        case Splitting::Split: { Rat v = phi_rat(q, m); return v * v; }
        case Splitting::Ramified: return phi_rat(q, m);
    }
    throw std::logic_error("phi_mp");
}

LaurentPoly gauss_binomial_qinv(int l, int m) {
    // phi_l(q^-1)/(phi_{l-m}(q^-1) phi_m(q^-1)) is a Laurent polynomial in q.
    // Build numerator and divide exactly, term by term in a 1-variable division.
    auto phi_qinv = [](int n) {
        LaurentPoly r(1);
        for (int i = 1; i <= n; ++i) {
            ExpKey k{};
            k[Vq] = -i;
            LaurentPoly f(1);
            f.add_term(k, QuadExt(-1));
            r *= f;
        }
        return r;
    };
    LaurentPoly num = phi_qinv(l);
    LaurentPoly den = phi_qinv(l - m) * phi_qinv(m);
    // exact division in Q[q, q^-1]: divide by the lowest term repeatedly
    LaurentPoly quot;
    LaurentPoly rem = num;
    // leading = term of den with highest q-exponent
    auto lead = [](const LaurentPoly& f) {
        auto it = f.terms.end();
        --it;
        return *it;
    };
    auto [dk, dc] = lead(den);
    while (!rem.is_zero()) {
        auto [rk, rc] = lead(rem);
        ExpKey qk{};
        qk[Vq] = rk[Vq] - dk[Vq];
        QuadExt qc = rc / dc;
        LaurentPoly mono;
        mono.add_term(qk, qc);
        quot += mono;
        rem -= mono * den;
        if (!rem.is_zero() && lead(rem).first[Vq] >= rk[Vq])
            throw std::logic_error("gauss_binomial_qinv: non-terminating division");
    }
    return quot;
}

IdentityReport verify_qbinomial_identity(int l) {
    if (l > 8) throw budget_error("verify_qbinomial_identity: l > 8 exceeds expansion budget");
    IdentityReport rep;
    // LHS: prod_{i=1..l} (1 - U^-1 Q q^(-i+1)) * U^l
    LaurentPoly lhs(1);
    for (int i = 1; i <= l; ++i) {
        ExpKey k{};
        k[VU] = -1;
        k[VQ] = 1;
        k[Vq] = -i + 1;
        LaurentPoly f(1);
        f.add_term(k, QuadExt(-1));
        lhs *= f;
    }
    lhs *= LaurentPoly::variable(VU, l);

    LaurentPoly rhs;
    for (int m = 0; m <= l; ++m) {
        LaurentPoly term = gauss_binomial_qinv(l, m);
        for (int i = 1; i <= l - m; ++i) {
            ExpKey k{};
            k[VQ] = 1;
            k[Vq] = -i + 1;
            LaurentPoly f(1);
            f.add_term(k, QuadExt(-1));
            term *= f;
        }
        for (int i = 1; i <= m; ++i) {
            ExpKey k{};
            k[VU] = 1;
            k[Vq] = i - 1;
            LaurentPoly f(1);
            f.add_term(k, QuadExt(-1));
            term *= f;
        }
        long e = (static_cast<long>(m) - static_cast<long>(m) * m) / 2;
        LaurentPoly sign;
        ExpKey k{};
        k[Vq] = static_cast<int>(e);
        sign.add_term(k, QuadExt(m % 2 == 0 ? 1 : -1));
        rhs += term * sign;
    }
    rep.difference = lhs - rhs;
    rep.pass = rep.difference.is_zero();
    if (!rep.pass) rep.note = "difference: " + rep.difference.str();
    return rep;
}

}  // namespace hermlat
