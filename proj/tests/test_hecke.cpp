#include "doctest.h"

#include <random>

#include "periodica/hecke.hpp"

using namespace periodica;

static HeckeElt random_hecke(int d, std::mt19937& rng, int nterms = 3, int steps = 5) {
    std::uniform_int_distribution<int> gen(0, d), nt(1, nterms), coef(-3, 3), exp(-2, 2);
    HeckeElt h(d);
    int n = nt(rng);
    for (int t = 0; t < n; ++t) {
        WeylElt x = identity(d);
        for (int s = 0; s < steps; ++s) {
            int g = gen(rng);
            x = compose(x, g == 0 ? rotation(d) : simple(d, g));
        }
        h.add(x, Laurent::monomial(coef(rng), exp(rng)));
    }
    return h;
}

TEST_CASE("quadratic relation") {
    for (int d = 2; d <= 4; ++d)
        for (int i = 1; i <= d; ++i) {
            HeckeElt t = HeckeElt::basis(simple(d, i));
            CHECK(t * t == HeckeElt::unit(d) + q_zeta() * t);
            CHECK(t * t.bar() == HeckeElt::unit(d));  // bar(t_i) = t_i^{-1}
            CHECK(t.times_gen_inv(i) == HeckeElt::unit(d));
        }
}

TEST_CASE("randomized defining relations") {
    // quadratic, braid, commuting, and rotation-conjugation relations checked
    // against many random elements multiplied on the right
    std::mt19937 rng(41);
    int checked = 0;
    for (int d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < 40; ++trial) {
            HeckeElt h = random_hecke(d, rng);
            for (int i = 1; i <= d; ++i) {
                CHECK(h.times_gen(i).times_gen(i) == h + q_zeta() * h.times_gen(i));
                ++checked;
                int j = i % d + 1;
                if (d > 2) {
                    CHECK(h.times_gen(i).times_gen(j).times_gen(i) ==
                          h.times_gen(j).times_gen(i).times_gen(j));
                    ++checked;
                }
                for (int k = 1; k <= d; ++k) {
                    bool adjacent = (std::abs(i - k) == 1) || (std::abs(i - k) == d - 1) || d == 2;
                    if (i != k && !adjacent) {
                        CHECK(h.times_gen(i).times_gen(k) == h.times_gen(k).times_gen(i));
                        ++checked;
                    }
                }
                // pi t_i pi^{-1} = t_{i+1 mod d}
                CHECK(h.times_pi(1).times_gen(i).times_pi(-1) == h.times_gen(i % d + 1));
                ++checked;
            }
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("product against basis-by-basis expansion") {
    std::mt19937 rng(43);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 20; ++trial) {
            HeckeElt a = random_hecke(d, rng), b = random_hecke(d, rng), c = random_hecke(d, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * HeckeElt::unit(d) == a);
            CHECK(HeckeElt::unit(d) * a == a);
        }
}

TEST_CASE("bar is a ring involution") {
    std::mt19937 rng(47);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 15; ++trial) {
            HeckeElt a = random_hecke(d, rng), b = random_hecke(d, rng);
            CHECK(a.bar().bar() == a);
            CHECK((a * b).bar() == a.bar() * b.bar());
        }
}

TEST_CASE("bernstein generators commute and invert") {
    for (int d = 2; d <= 3; ++d) {
        for (int i = 1; i <= d; ++i) {
            CHECK(bernstein(d, i) * bernstein(d, i, true) == HeckeElt::unit(d));
            for (int j = i + 1; j <= d; ++j)
                CHECK(bernstein(d, i) * bernstein(d, j) == bernstein(d, j) * bernstein(d, i));
        }
        // product of all of them is central: equals t_{pi}^d
        HeckeElt prod = HeckeElt::unit(d);
        for (int i = 1; i <= d; ++i) prod = prod * bernstein(d, i);
        CHECK(prod == HeckeElt::unit(d).times_pi(d));
    }
}

TEST_CASE("bernstein cross relations with the generators") {
    Laurent zeta = q_zeta();
    for (int d = 2; d <= 3; ++d)
        for (int i = 1; i < d; ++i) {
            HeckeElt ti = HeckeElt::basis(simple(d, i));
            HeckeElt xi = bernstein(d, i), xi1 = bernstein(d, i + 1);
            HeckeElt yi = bernstein(d, i, true), yi1 = bernstein(d, i + 1, true);
            CHECK(xi1 == ti * xi * ti);
            CHECK(xi * ti == ti * xi1 - zeta * xi1);
            CHECK(xi1 * ti == ti * xi + zeta * xi1);
            CHECK(yi * ti == ti * yi1 + zeta * yi);
            CHECK(yi1 * ti == ti * yi - zeta * yi);
            // generators commute with bernstein elements two or more steps away
            for (int j = 1; j <= d; ++j)
                if (j != i && j != i + 1) {
                    HeckeElt xj = bernstein(d, j);
                    CHECK(xj * ti == ti * xj);
                }
        }
}

TEST_CASE("x monomials") {
    for (int d = 2; d <= 3; ++d) {
        CHECK(x_monomial(Vec(d, 0)) == HeckeElt::unit(d));
        Vec e1(d, 0);
        e1[0] = 1;
        CHECK(x_monomial(e1) == bernstein(d, 1));
        Vec m(d, 0);
        m[0] = 1;
        m[1] = -1;
        CHECK(x_monomial(m) == bernstein(d, 1) * bernstein(d, 2, true));
    }
}

TEST_CASE("parabolic quasi-idempotents") {
    for (const Vec& f : {Vec{2}, Vec{1, 1}, Vec{2, 1}, Vec{3}, Vec{2, 2}}) {
        HeckeElt rho = rho_of(f);
        Laurent m = poincare_of(f);
        CHECK(rho * rho == m * rho);
        CHECK(rho.bar() == Laurent::q_power(-2 * nu_of(f)) * rho);
        // interior generators act by q on either side
        int d = vec_sum(f);
        for (int i : interior_indices(f)) {
            CHECK(rho.times_gen(i) == Laurent::q_power(1) * rho);
            CHECK(HeckeElt::basis(simple(d, i)) * rho == Laurent::q_power(1) * rho);
        }
    }
}

TEST_CASE("sign character") {
    for (int d = 2; d <= 3; ++d) {
        for (int i = 1; i <= d; ++i)
            CHECK(sign_eval(HeckeElt::basis(simple(d, i))) == -Laurent::q_power(-1));
        // multiplicative on products of generators
        std::mt19937 rng(53);
        std::uniform_int_distribution<int> gen(1, d);
        for (int trial = 0; trial < 20; ++trial) {
            WeylElt x = identity(d);
            Laurent expect = 1;
            for (int s = 0; s < 6; ++s) {
                x = compose(x, simple(d, gen(rng)));
            }
            HeckeElt h = HeckeElt::basis(x);
            CHECK(sign_eval(h) == Laurent::monomial(length(x) % 2 ? -1 : 1, -length(x)));
        }
        // the root monomials evaluate to q^2
        for (int i = 1; i < d; ++i) {
            Vec alpha(d, 0);
            alpha[i - 1] = 1;
            alpha[i] = -1;
            CHECK(sign_eval(x_monomial(alpha)) == Laurent::q_power(2));
        }
        // rotation components are outside the character's domain
        CHECK_THROWS_AS(sign_eval(HeckeElt::unit(d).times_pi(1)), error);
    }
}

TEST_CASE("affine generator from rotation conjugation") {
    for (int d = 2; d <= 4; ++d) {
        HeckeElt td = HeckeElt::basis(simple(d, d));
        HeckeElt conj =
            HeckeElt::unit(d).times_pi(1).times_gen(d - 1).times_pi(-1);
        CHECK(td == conj);
    }
}
