#include "periodica/laurent.hpp"

namespace periodica {

Laurent Laurent::divided_by(const Laurent& g) const {
    require(!g.is_zero(), "division by zero");
    Laurent r = *this, quot;
    const int eg = g.max_deg();
    const Int& ag = g.terms().rbegin()->second;
    while (!r.is_zero()) {
        int er = r.max_deg();
        const Int& ar = r.terms().rbegin()->second;
        require(ar % ag == 0, "inexact division: " + str() + " by " + g.str());
        Laurent t = Laurent::monomial(ar / ag, er - eg);
        quot += t;
        r -= t * g;
        require(r.is_zero() || r.max_deg() < er, "inexact division: " + str() + " by " + g.str());
    }
    return quot;
}

std::string laurent_to_latex(const Laurent& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : f.terms()) {
        Int abs_a = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (abs_a != 1 || e == 0) os << abs_a.str();
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

Laurent quantum_int(int n) {
    require(n >= 0, "quantum_int of negative n");
    Laurent f;
    for (int e = n - 1; e >= 1 - n; e -= 2) f += Laurent::q_power(e);
    return f;
}

Laurent quantum_factorial(int n) {
    Laurent f = 1;
    for (int k = 2; k <= n; ++k) f *= quantum_int(k);
    return f;
}

}  // namespace periodica
