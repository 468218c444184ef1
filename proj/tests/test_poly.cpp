#include <doctest.h>

#include <random>

#include "sgr/poly.hpp"

using namespace sgr;

namespace {

const Field Q = Field::rationals();

Poly product(const std::vector<PolyFactor>& factors, const Field& f) {
    Poly p = Poly::constant(Scalar::one(f));
    for (const auto& [q, m] : factors)
        for (int k = 0; k < m; ++k) p = p * q;
    return p;
}

}  // namespace

TEST_CASE("division, gcd, bezout") {
    Poly a = Poly::from_ints(Q, {-1, 0, 1});  // t^2 - 1
    Poly b = Poly::from_ints(Q, {-1, 1});     // t - 1
    auto [q, r] = poly_divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == Poly::from_ints(Q, {1, 1}));
    CHECK(poly_gcd(a, b) == b.monic());

    Poly c = Poly::from_ints(Q, {1, 1});  // t + 1, coprime to b
    GcdExt e = poly_gcd_ext(b, c);
    CHECK(e.g.degree() == 0);
    CHECK(e.u * b + e.v * c == e.g);
}

TEST_CASE("rational factorization basics") {
    auto f1 = factor_poly(Poly::from_ints(Q, {-1, 0, 1}));  // t^2 - 1
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].p == Poly::from_ints(Q, {-1, 1}));
    CHECK(f1[1].p == Poly::from_ints(Q, {1, 1}));

    CHECK(is_irreducible(Poly::from_ints(Q, {1, 0, 1})));   // t^2 + 1
    CHECK(is_irreducible(Poly::from_ints(Q, {1, 0, 0, 0, 1})));  // t^4 + 1: modular recombination
    CHECK(is_irreducible(Poly::from_ints(Q, {-2, 0, 1})));  // t^2 - 2

    // t^6 - 1 = (t-1)(t+1)(t^2+t+1)(t^2-t+1)
    auto f2 = factor_poly(Poly::from_ints(Q, {-1, 0, 0, 0, 0, 0, 1}));
    CHECK(f2.size() == 4);
    CHECK(product(f2, Q) == Poly::from_ints(Q, {-1, 0, 0, 0, 0, 0, 1}));

    // t^12 - 1: one factor per divisor of 12
    auto f3 = factor_poly(Poly::from_ints(Q, {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(f3.size() == 6);

    // rational coefficients: t^2 + (5/2) t - 3/2 = (t - 1/2)(t + 3)
    Poly mixed(Q, {Scalar::parse(Q, "-3/2"), Scalar::parse(Q, "5/2"), Scalar::one(Q)});
    auto f4 = factor_poly(mixed);
    REQUIRE(f4.size() == 2);
    CHECK(f4[0].p == Poly(Q, {Scalar::parse(Q, "-1/2"), Scalar::one(Q)}));
    CHECK(f4[1].p == Poly::from_ints(Q, {3, 1}));

    // multiplicities: (t-1)^2 (t+2)
    Poly rep = Poly::from_ints(Q, {-1, 1}) * Poly::from_ints(Q, {-1, 1}) *
               Poly::from_ints(Q, {2, 1});
    auto f5 = factor_poly(rep);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].p == Poly::from_ints(Q, {-1, 1}));
    CHECK(f5[0].multiplicity == 2);
}

TEST_CASE("factorization over prime fields") {
    const Field F5 = Field::gf(5);
    auto f1 = factor_poly(Poly::from_ints(F5, {1, 0, 1}));  // t^2 + 1 = (t+2)(t+3) mod 5
    CHECK(f1.size() == 2);
    for (const auto& [p, m] : f1) {
        CHECK(p.degree() == 1);
        CHECK(m == 1);
    }
    const Field F7 = Field::gf(7);
    CHECK(is_irreducible(Poly::from_ints(F7, {1, 0, 1})));  // -1 is no square mod 7

    const Field F2 = Field::gf(2);
    CHECK(is_irreducible(Poly::from_ints(F2, {1, 1, 1})));
    // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over GF(2)
    auto f2 = factor_poly(Poly::from_ints(F2, {1, 0, 1, 0, 1}));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].p == Poly::from_ints(F2, {1, 1, 1}));
    CHECK(f2[0].multiplicity == 2);
    // t^2 = t * t
    auto f3 = factor_poly(Poly::from_ints(F2, {0, 0, 1}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].multiplicity == 2);
}

TEST_CASE("factorization round trip on random products") {
    std::mt19937_64 rng(0xFAC70ULL);
    for (const Field& f : {Q, Field::gf(7), Field::gf(3)}) {
        for (int trial = 0; trial < 12; ++trial) {
            Poly p = Poly::constant(Scalar::one(f));
            const int parts = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < parts; ++k) {
                const int deg = 1 + static_cast<int>(rng() % 3);
                std::vector<Scalar> c;
                for (int i = 0; i < deg; ++i)
                    c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % 5) - 2));
                c.push_back(Scalar::one(f));
                p = p * Poly(f, std::move(c));
            }
            auto factors = factor_poly(p);
            CHECK(product(factors, f) == p);
            for (const auto& [q, m] : factors) {
                (void)m;
                CHECK(is_irreducible(q));
                CHECK(q.is_monic());
            }
        }
    }
}
