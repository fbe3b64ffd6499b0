#include "hermlat/symbolic.hpp"

#include <cmath>
#include <sstream>

namespace hermlat {

SymbolicReal SymbolicReal::pow(int e) const {
    SymbolicReal r(Rat(1));
    SymbolicReal x = *this;
    if (e < 0) {
        x = SymbolicReal(Rat(1)) / x;
        e = -e;
    }
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

double SymbolicReal::evaluate(long D) const {
    double v = static_cast<double>(rat.convert_to<double>());
    v *= std::pow(M_PI, pi_half / 2.0);
    v *= std::pow(static_cast<double>(D), sqrtD_exp / 2.0);
    v *= std::exp(log_aux);
    return v;
}

std::string SymbolicReal::str() const {
    std::ostringstream os;
    os << rat_str(rat);
    if (pi_half != 0) {
        if (pi_half % 2 == 0)
            os << " * pi^" << pi_half / 2;
        else
            os << " * pi^(" << pi_half << "/2)";
    }
    if (sqrtD_exp != 0) os << " * D^(" << sqrtD_exp << "/2)";
    if (log_aux != 0.0) os << " * exp(" << log_aux << ")";
    return os.str();
}

SymbolicReal gamma_R(int s) {
    if (s < 1) throw std::invalid_argument("gamma_R: s >= 1 required");
    if (s % 2 == 0) {
        Rat fact = 1;  // Gamma(s/2) = (s/2-1)!
        for (int i = 1; i <= s / 2 - 1; ++i) fact *= i;
        return SymbolicReal(fact, -s, 0);
    }
    // s odd: Gamma(s/2) = (s/2-1)(s/2-2)...(1/2) * sqrt(pi)
    Rat c = 1;
    for (Rat x = Rat(s) / 2 - 1; x > 0; x -= 1) c *= x;
    // pi^(-s/2) * c * pi^(1/2)
    return SymbolicReal(c, -s + 1, 0);
}

SymbolicReal gamma_C(int s) {
    if (s < 1) throw std::invalid_argument("gamma_C: s >= 1 required");
    Rat fact = 1;
    for (int i = 1; i <= s - 1; ++i) fact *= i;
    Rat c = 2 * fact / rat_pow(Rat(2), s);
    return SymbolicReal(c, -2 * s, 0);
}

}  // namespace hermlat
