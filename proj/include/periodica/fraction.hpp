#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "periodica/laurent.hpp"

namespace periodica {

using Rat = boost::multiprecision::cpp_rational;

/* Dense univariate polynomial over Q, ascending coefficients, no trailing
   zeros.  Only used inside exact linear solves; results are converted back
   to Laurent form (and must come out integral there). */
class QPoly {
public:
    QPoly() = default;
    QPoly(Rat a) {
        if (a != 0) c_.push_back(std::move(a));
    }
    static QPoly x_power(int e) {
        require(e >= 0, "x_power needs e >= 0");
        QPoly p;
        p.c_.assign(e + 1, Rat(0));
        p.c_[e] = 1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return int(c_.size()) - 1; }  // -1 for zero
    const Rat& lead() const {
        require(!c_.empty(), "lead of zero");
        return c_.back();
    }
    Rat coeff(int e) const { return (e >= 0 && e < int(c_.size())) ? c_[e] : Rat(0); }

    QPoly operator+(const QPoly& g) const {
        QPoly r;
        r.c_.resize(std::max(c_.size(), g.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (size_t i = 0; i < g.c_.size(); ++i) r.c_[i] += g.c_[i];
        r.trim();
        return r;
    }
    QPoly operator-() const {
        QPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    QPoly operator-(const QPoly& g) const { return *this + (-g); }
    QPoly operator*(const QPoly& g) const {
        if (is_zero() || g.is_zero()) return {};
        QPoly r;
        r.c_.assign(c_.size() + g.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < g.c_.size(); ++j) r.c_[i + j] += c_[i] * g.c_[j];
        r.trim();
        return r;
    }
    bool operator==(const QPoly& g) const { return c_ == g.c_; }

    /* this = q*g + r with deg r < deg g */
    void divmod(const QPoly& g, QPoly& quo, QPoly& rem) const {
        require(!g.is_zero(), "poly division by zero");
        quo = QPoly{};
        rem = *this;
        while (!rem.is_zero() && rem.deg() >= g.deg()) {
            int e = rem.deg() - g.deg();
            Rat a = rem.lead() / g.lead();
            QPoly t = QPoly(a) * x_power(e);
            quo = quo + t;
            rem = rem - t * g;
        }
    }

    QPoly monic() const {
        if (is_zero()) return {};
        QPoly r = *this;
        Rat l = r.lead();
        for (auto& a : r.c_) a /= l;
        return r;
    }

    /* number of trailing zero coefficients, i.e. multiplicity of the root q=0 */
    int valuation() const {
        require(!c_.empty(), "valuation of zero");
        int v = 0;
        while (c_[v] == 0) ++v;
        return v;
    }

private:
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly quo, rem;
        a.divmod(b, quo, rem);
        a = std::move(b);
        b = rem.monic();
    }
    return a.monic();
}

/* Rational function num/den with den monic and gcd(num, den) = 1. */
class RatFun {
public:
    RatFun() : den_(Rat(1)) {}
    RatFun(Rat a) : num_(std::move(a)), den_(Rat(1)) {}
    RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFun from_laurent(const Laurent& f) {
        if (f.is_zero()) return {};
        int shift = std::min(0, f.min_deg());
        QPoly num;
        for (const auto& [e, a] : f.terms()) num = num + QPoly(Rat(a)) * QPoly::x_power(e - shift);
        return RatFun(std::move(num), QPoly::x_power(-shift));
    }

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    RatFun operator+(const RatFun& g) const { return RatFun(num_ * g.den_ + g.num_ * den_, den_ * g.den_); }
    RatFun operator-(const RatFun& g) const { return RatFun(num_ * g.den_ - g.num_ * den_, den_ * g.den_); }
    RatFun operator*(const RatFun& g) const { return RatFun(num_ * g.num_, den_ * g.den_); }
    RatFun operator/(const RatFun& g) const {
        require(!g.is_zero(), "rational function division by zero");
        return RatFun(num_ * g.den_, den_ * g.num_);
    }
    RatFun operator-() const { return RatFun(-num_, den_); }
    bool operator==(const RatFun& g) const { return num_ == g.num_ && den_ == g.den_; }

    /* Exact conversion back; valid iff den is a power of q and all
       resulting coefficients are integers.  Throws otherwise. */
    Laurent to_laurent() const {
        if (num_.is_zero()) return {};
        require(den_.deg() == den_.valuation(), "rational function is not a Laurent polynomial");
        int shift = den_.deg();
        Laurent f;
        for (int e = 0; e <= num_.deg(); ++e) {
            Rat a = num_.coeff(e);
            if (a == 0) continue;
            require(boost::multiprecision::denominator(a) == 1,
                    "rational function has non-integral coefficients");
            f += Laurent::monomial(boost::multiprecision::numerator(a), e - shift);
        }
        return f;
    }

private:
    QPoly num_, den_;

    void reduce() {
        require(!den_.is_zero(), "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(Rat(1));
            return;
        }
        QPoly g = poly_gcd(num_, den_);
        QPoly quo, rem;
        num_.divmod(g, quo, rem);
        num_ = quo;
        den_.divmod(g, quo, rem);
        den_ = quo;
        Rat l = den_.lead();
        num_ = num_ * QPoly(Rat(1) / l);
        den_ = den_ * QPoly(Rat(1) / l);
    }
};

}  // namespace periodica
