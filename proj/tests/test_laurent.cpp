#include "doctest.h"

#include <random>

#include "periodica/fraction.hpp"
#include "periodica/laurent.hpp"

using namespace periodica;

static Laurent random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-5, 5), coef(-9, 9);
    Laurent f;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) f += Laurent::monomial(coef(rng), exp(rng));
    return f;
}

TEST_CASE("laurent arithmetic basics") {
    Laurent q = Laurent::q_power(1);
    Laurent f = q + Laurent(1);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == 1);
    CHECK((f - f).is_zero());
    CHECK((f * f).coeff(1) == 2);
    CHECK(Laurent(0).is_zero());
    CHECK((q * Laurent::q_power(-1)).is_one());
    CHECK(q_zeta() == Laurent::q_power(1) - Laurent::q_power(-1));
}

TEST_CASE("bar swaps q and q inverse") {
    Laurent f = Laurent::q_power(1) + Laurent(1);
    CHECK(f.bar() == Laurent::q_power(-1) + Laurent(1));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Laurent g = random_laurent(rng), h = random_laurent(rng);
        CHECK(g.bar().bar() == g);
        CHECK((g * h).bar() == g.bar() * h.bar());
        CHECK((g + h).bar() == g.bar() + h.bar());
    }
}

TEST_CASE("symmetric completion, low tail") {
    CHECK(symmetric_completion(Laurent::q_power(2), Tail::low) ==
          Laurent::q_power(2) + Laurent::q_power(-2));
    Laurent f = Laurent(2) + Laurent::q_power(1);
    CHECK(symmetric_completion(f, Tail::low) ==
          Laurent(2) + Laurent::q_power(1) + Laurent::q_power(-1));
}

TEST_CASE("symmetric completion, high tail") {
    CHECK(symmetric_completion(Laurent::q_power(-2), Tail::high) ==
          Laurent::q_power(2) + Laurent::q_power(-2));
    Laurent f = Laurent(2) + Laurent::q_power(-1);
    CHECK(symmetric_completion(f, Tail::high) ==
          Laurent(2) + Laurent::q_power(1) + Laurent::q_power(-1));
}

TEST_CASE("symmetric completion is the unique bar-fixed part") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Laurent f = random_laurent(rng);
        for (Tail t : {Tail::low, Tail::high}) {
            Laurent r = symmetric_completion(f, t);
            CHECK(r.is_bar_fixed());
            CHECK(supported_in(f - r, t));
            // uniqueness: a bar-fixed element supported strictly on one side is zero
            Laurent r2 = symmetric_completion(f + r - r, t);
            CHECK(r2 == r);
        }
        // bar-fixed inputs are their own completion
        Laurent s = f + f.bar();
        CHECK(symmetric_completion(s, Tail::low) == s);
        CHECK(symmetric_completion(s, Tail::high) == s);
    }
}

TEST_CASE("exact division") {
    Laurent num = Laurent::q_power(2) - Laurent::q_power(-2);
    Laurent den = q_zeta();
    CHECK(num.divided_by(den) == Laurent::q_power(1) + Laurent::q_power(-1));
    CHECK_THROWS_AS((Laurent::q_power(1) + Laurent(1)).divided_by(Laurent(2)), error);
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Laurent g = random_laurent(rng), h = random_laurent(rng);
        if (h.is_zero()) continue;
        CHECK((g * h).divided_by(h) == g);
    }
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1).is_one());
    CHECK(quantum_int(2) == Laurent::q_power(1) + Laurent::q_power(-1));
    CHECK(quantum_int(3) == Laurent::q_power(2) + Laurent(1) + Laurent::q_power(-2));
    CHECK(quantum_factorial(3) == quantum_int(2) * quantum_int(3));
    // [n] * (q - q^{-1}) = q^n - q^{-n}
    for (int n = 1; n <= 6; ++n)
        CHECK(quantum_int(n) * q_zeta() == Laurent::q_power(n) - Laurent::q_power(-n));
}

TEST_CASE("rational functions reduce and convert back") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        Laurent f = random_laurent(rng), g = random_laurent(rng);
        RatFun rf = RatFun::from_laurent(f);
        CHECK(rf.to_laurent() == f);
        if (!g.is_zero()) {
            RatFun quot = rf / RatFun::from_laurent(g);
            CHECK(quot * RatFun::from_laurent(g) == rf);
            RatFun back = quot * RatFun::from_laurent(g);
            CHECK(back.to_laurent() == f);
        }
    }
    // 1 / (1 + q) is not a Laurent polynomial
    RatFun bad = RatFun(Rat(1)) / RatFun::from_laurent(Laurent(1) + Laurent::q_power(1));
    CHECK_THROWS_AS(bad.to_laurent(), error);
}
