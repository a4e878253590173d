#pragma once

#include <map>

#include "periodica/laurent.hpp"
#include "periodica/weyl.hpp"

namespace periodica {

/* The extended affine Hecke algebra on d strands over the Laurent ring,
   in the standard basis t_x indexed by extended affine Weyl elements.
   Quadratic relation: t_i^2 = 1 + (q - q^{-1}) t_i, so t_i has eigenvalues
   q and -q^{-1}.  Multiplication reduces the right factor to a rotation
   power times a reduced word and applies the generator rules one step at
   a time. */
class HeckeElt {
public:
    explicit HeckeElt(int d) : d_(d) {}
    static HeckeElt basis(const WeylElt& x, Laurent coef = Laurent(1)) {
        HeckeElt h(x.d());
        h.add(x, coef);
        return h;
    }
    static HeckeElt unit(int d) { return basis(identity(d)); }

    int rank() const { return d_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<WeylElt, Laurent>& terms() const { return c_; }
    Laurent coeff(const WeylElt& x) const {
        auto it = c_.find(x);
        return it == c_.end() ? Laurent(0) : it->second;
    }

    void add(const WeylElt& x, const Laurent& a) {
        require(x.d() == d_, "HeckeElt: rank mismatch");
        if (a.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(x, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    HeckeElt& operator+=(const HeckeElt& g) {
        require(g.d_ == d_, "HeckeElt: rank mismatch");
        for (const auto& [x, a] : g.c_) add(x, a);
        return *this;
    }
    HeckeElt& operator-=(const HeckeElt& g) {
        require(g.d_ == d_, "HeckeElt: rank mismatch");
        for (const auto& [x, a] : g.c_) add(x, -a);
        return *this;
    }
    friend HeckeElt operator+(HeckeElt f, const HeckeElt& g) { return f += g; }
    friend HeckeElt operator-(HeckeElt f, const HeckeElt& g) { return f -= g; }
    HeckeElt operator-() const {
        HeckeElt h(d_);
        for (const auto& [x, a] : c_) h.c_[x] = -a;
        return h;
    }
    friend HeckeElt operator*(const Laurent& s, const HeckeElt& g) {
        HeckeElt h(g.d_);
        for (const auto& [x, a] : g.c_) h.add(x, s * a);
        return h;
    }
    bool operator==(const HeckeElt& g) const { return d_ == g.d_ && c_ == g.c_; }
    bool operator!=(const HeckeElt& g) const { return !(*this == g); }

    /* right multiplication by t_{s_i}, t_{s_i}^{-1} = t_{s_i} - (q - q^{-1}),
       and by the basis element of a rotation power */
    HeckeElt times_gen(int i) const;
    HeckeElt times_gen_inv(int i) const;
    HeckeElt times_pi(int k) const;

    HeckeElt operator*(const HeckeElt& g) const;

    /* the bar involution: q -> q^{-1}, t_x -> t_{x^{-1}}^{-1} */
    HeckeElt bar() const;

    std::string str() const;

private:
    int d_;
    std::map<WeylElt, Laurent> c_;
};

/* Bernstein generators: commuting invertible elements, one per strand.
   The first is the rotation times inverse generators going down; each next
   one conjugates the previous by t_i. */
HeckeElt bernstein(int d, int i, bool inverse = false);
/* product of Bernstein powers given by the exponent vector */
HeckeElt x_monomial(const Vec& nu);

/* sum of q^{length} t_w over the parabolic subgroup of f */
HeckeElt rho_of(const Vec& f);
/* sum of q^{2 length}, the normalizing scalar with rho^2 = m rho */
Laurent poincare_of(const Vec& f);

/* the one-dimensional character t_i -> -q^{-1}; defined on the span of
   basis elements with zero rotation power, throws elsewhere */
Laurent sign_eval(const HeckeElt& h);

}  // namespace periodica
