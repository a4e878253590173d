#include "periodica/hecke.hpp"

#include <sstream>

namespace periodica {

HeckeElt HeckeElt::times_gen(int i) const {
    HeckeElt out(d_);
    WeylElt s = simple(d_, i);
    Laurent zeta = q_zeta();
    for (const auto& [x, a] : c_) {
        WeylElt xs = compose(x, s);
        if (length(xs) > length(x)) {
            out.add(xs, a);
        } else {
            out.add(xs, a);
            out.add(x, zeta * a);
        }
    }
    return out;
}

HeckeElt HeckeElt::times_gen_inv(int i) const {
    // t_i^{-1} = t_i - (q - q^{-1})
    HeckeElt out = times_gen(i);
    out -= q_zeta() * *this;
    return out;
}

HeckeElt HeckeElt::times_pi(int k) const {
    HeckeElt out(d_);
    WeylElt pk = power(rotation(d_), k);
    for (const auto& [x, a] : c_) out.add(compose(x, pk), a);
    return out;
}

HeckeElt HeckeElt::operator*(const HeckeElt& g) const {
    require(d_ == g.d_, "HeckeElt: rank mismatch");
    HeckeElt out(d_);
    for (const auto& [y, b] : g.c_) {
        PiWord pw = reduced_word(y);
        HeckeElt part = b * this->times_pi(pw.k);
        for (int i : pw.word) part = part.times_gen(i);
        out += part;
    }
    return out;
}

HeckeElt HeckeElt::bar() const {
    HeckeElt out(d_);
    for (const auto& [x, a] : c_) {
        PiWord pw = reduced_word(x);
        HeckeElt part = HeckeElt::basis(power(rotation(d_), pw.k), a.bar());
        for (int i : pw.word) part = part.times_gen_inv(i);
        out += part;
    }
    return out;
}

std::string HeckeElt::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, a] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << a.str() << ")*t[";
        PiWord pw = reduced_word(x);
        os << "pi^" << pw.k;
        for (int i : pw.word) os << " s" << i;
        os << "]";
    }
    return os.str();
}

HeckeElt bernstein(int d, int i, bool inverse) {
    require(i >= 1 && i <= d, "bernstein index out of range");
    HeckeElt x(d);
    if (!inverse) {
        // x_1 = t_pi t_{d-1}^{-1} ... t_1^{-1}, then x_{j+1} = t_j x_j t_j
        x = HeckeElt::basis(rotation(d));
        for (int j = d - 1; j >= 1; --j) x = x.times_gen_inv(j);
        for (int j = 1; j < i; ++j) {
            x = HeckeElt::basis(simple(d, j)) * x;
            x = x.times_gen(j);
        }
    } else {
        // x_1^{-1} = t_1 ... t_{d-1} t_pi^{-1}, then x_{j+1}^{-1} = t_j^{-1} x_j^{-1} t_j^{-1}
        x = HeckeElt::unit(d);
        for (int j = 1; j <= d - 1; ++j) x = x.times_gen(j);
        x = x.times_pi(-1);
        for (int j = 1; j < i; ++j) {
            HeckeElt tj_inv = HeckeElt::basis(simple(d, j));
            tj_inv = tj_inv - q_zeta() * HeckeElt::unit(d);
            x = tj_inv * x;
            x = x.times_gen_inv(j);
        }
    }
    return x;
}

HeckeElt x_monomial(const Vec& nu) {
    int d = int(nu.size());
    HeckeElt out = HeckeElt::unit(d);
    for (int i = 1; i <= d; ++i) {
        for (int k = 0; k < std::abs(nu[i - 1]); ++k) out = out * bernstein(d, i, nu[i - 1] < 0);
    }
    return out;
}

HeckeElt rho_of(const Vec& f) {
    int d = vec_sum(f);
    HeckeElt out(d);
    for (const auto& w : parabolic_subgroup(f)) out.add(w, Laurent::q_power(length(w)));
    return out;
}

Laurent poincare_of(const Vec& f) {
    Laurent m;
    for (const auto& w : parabolic_subgroup(f)) m += Laurent::q_power(2 * length(w));
    return m;
}

Laurent sign_eval(const HeckeElt& h) {
    Laurent val;
    for (const auto& [x, a] : h.terms()) {
        require(pi_power(x) == 0, "sign_eval: element has a rotation component");
        Laurent t = Laurent::monomial(length(x) % 2 == 0 ? 1 : -1, -length(x));
        val += a * t;
    }
    return val;
}

}  // namespace periodica
