#pragma once

#include "hermlat/laurent.hpp"

namespace hermlat {

// (U,q)_m = prod_{i=1..m} (1 - q^(i-1) U) as a polynomial in the given slots
LaurentPoly pochhammer(Var u_var, Var q_var, int m);

// phi_m(q) = prod_{i=1..m} (1 - q^i), polynomial version
LaurentPoly phi_poly(Var q_var, int m);

// phi_m at a rational value
Rat phi_rat(const Rat& q, int m);

enum class Splitting { Split, Inert, Ramified };

// phi_{m,p}: phi_m(q^2), phi_m(q)^2 or phi_m(q) for inert / split / ramified
Rat phi_mp(const Rat& q, Splitting sp, int m);

// q-binomial phi_l(q^-1) / (phi_{l-m}(q^-1) phi_m(q^-1)) as a Laurent polynomial in q
LaurentPoly gauss_binomial_qinv(int l, int m);

struct IdentityReport {
    bool pass = false;
    LaurentPoly difference;  // zero iff pass
    std::string note;
};

// Three-variable identity underlying the triangular series inversions:
//   prod_{i=1..l} (1 - U^-1 Q q^(-i+1)) U^l
//     = sum_{m=0..l} [l,m]_{q^-1} prod_{i=1..l-m}(1-Q q^(-i+1))
//                     prod_{i=1..m}(1-U q^(i-1)) (-1)^m q^((m-m^2)/2)
// Expands both sides over Q(q) and returns the difference (must vanish).
IdentityReport verify_qbinomial_identity(int l);

}  // namespace hermlat
