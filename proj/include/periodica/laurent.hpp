#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <sstream>
#include <string>

#include "periodica/error.hpp"

namespace periodica {

using Int = boost::multiprecision::cpp_int;

/* Laurent polynomials in one variable q with integer coefficients,
   stored sparsely as exponent -> nonzero coefficient.  This is the
   coefficient ring for everything else in the library, so it stays
   exact: no floating point anywhere. */
class Laurent {
public:
    Laurent() = default;
    Laurent(long n) { if (n != 0) c_[0] = n; }
    Laurent(Int n) { if (n != 0) c_[0] = std::move(n); }

    static Laurent q_power(int e) {
        Laurent f;
        f.c_[e] = 1;
        return f;
    }
    static Laurent monomial(Int coef, int e) {
        Laurent f;
        if (coef != 0) f.c_[e] = std::move(coef);
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    const std::map<int, Int>& terms() const { return c_; }

    Int coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }
    int min_deg() const {
        require(!c_.empty(), "min_deg of zero");
        return c_.begin()->first;
    }
    int max_deg() const {
        require(!c_.empty(), "max_deg of zero");
        return c_.rbegin()->first;
    }

    /* true iff f = c q^e for a single term (or f = 0 with unit=false) */
    bool is_monomial() const { return c_.size() == 1; }
    /* nonzero and of the form ± q^e */
    bool is_unit_monomial() const {
        return c_.size() == 1 && (c_.begin()->second == 1 || c_.begin()->second == -1);
    }

    Laurent& operator+=(const Laurent& g) {
        for (const auto& [e, a] : g.c_) add_term(e, a);
        return *this;
    }
    Laurent& operator-=(const Laurent& g) {
        for (const auto& [e, a] : g.c_) add_term(e, -a);
        return *this;
    }
    Laurent operator-() const {
        Laurent f;
        for (const auto& [e, a] : c_) f.c_[e] = -a;
        return f;
    }
    Laurent operator*(const Laurent& g) const {
        Laurent f;
        for (const auto& [e1, a1] : c_)
            for (const auto& [e2, a2] : g.c_) f.add_term(e1 + e2, a1 * a2);
        return f;
    }
    Laurent& operator*=(const Laurent& g) { return *this = *this * g; }

    friend Laurent operator+(Laurent f, const Laurent& g) { return f += g; }
    friend Laurent operator-(Laurent f, const Laurent& g) { return f -= g; }

    bool operator==(const Laurent& g) const { return c_ == g.c_; }
    bool operator!=(const Laurent& g) const { return c_ != g.c_; }
    bool operator<(const Laurent& g) const { return c_ < g.c_; }  // arbitrary total order for maps

    /* q -> q^{-1} */
    Laurent bar() const {
        Laurent f;
        for (const auto& [e, a] : c_) f.c_[-e] = a;
        return f;
    }
    bool is_bar_fixed() const { return *this == bar(); }

    /* exact division; throws if g does not divide this in Z[q,q^{-1}] */
    Laurent divided_by(const Laurent& g) const;

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, a] : c_) {
            Int abs_a = a < 0 ? Int(-a) : a;
            if (first) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            first = false;
            if (abs_a != 1 || e == 0) os << abs_a.str();
            if (e != 0) {
                if (abs_a != 1) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::map<int, Int> c_;

    void add_term(int e, const Int& a) {
        if (a == 0) return;
        auto [it, inserted] = c_.try_emplace(e, a);
        if (!inserted) {
            it->second += a;
            if (it->second == 0) c_.erase(it);
        }
    }
};

/* Which strict half-line of exponents a remainder is allowed to live on. */
enum class Tail {
    low,   // exponents <= -1
    high,  // exponents >= +1
};

inline bool supported_in(const Laurent& f, Tail t) {
    if (f.is_zero()) return true;
    return t == Tail::low ? f.max_deg() <= -1 : f.min_deg() >= 1;
}

/* The unique bar-fixed r such that f - r is supported in the given tail.
   For Tail::low this keeps the constant term and mirrors every positive-
   exponent term down; for Tail::high the reflection goes the other way. */
inline Laurent symmetric_completion(const Laurent& f, Tail t) {
    Laurent r;
    for (const auto& [e, a] : f.terms()) {
        bool keep = (t == Tail::low) ? e >= 0 : e <= 0;
        if (!keep) continue;
        r += Laurent::monomial(a, e);
        if (e != 0) r += Laurent::monomial(a, -e);
    }
    return r;
}

inline Laurent q_zeta() {  // q - q^{-1}, the ubiquitous quadratic-relation scalar
    return Laurent::q_power(1) - Laurent::q_power(-1);
}

std::string laurent_to_latex(const Laurent& f);

/* balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} */
Laurent quantum_int(int n);
Laurent quantum_factorial(int n);

}  // namespace periodica
