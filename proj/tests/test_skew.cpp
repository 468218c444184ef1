#include <doctest.h>

#include <random>

#include "sgr/skew.hpp"

using namespace sgr;

namespace {

const Field Q = Field::rationals();

// k^2 * Z2 with the coordinate swap; isomorphic to M_2(k)
ContextPtr swap_ring(const Field& f = Q) {
    return make_context(Action::from_generators({{"g", Permutation({2, 1})}}), f);
}

// k^4 * Z4, free transitive
ContextPtr cycle4_ring(const Field& f = Q) {
    return make_context(Action::from_generators({{"g", Permutation({2, 3, 4, 1})}}), f);
}

// group algebra k[Z2]: trivial action on k^1
ContextPtr group_algebra_z2(const Field& f) {
    return make_context(Action(FiniteGroup::cyclic(2), 1,
                               {Permutation::identity(1), Permutation::identity(1)}),
                        f);
}

SkewElement random_element(const ContextPtr& ctx, std::mt19937_64& rng) {
    SkewElement x = SkewElement::zero(ctx);
    for (int g = 0; g < ctx->group().order(); ++g) {
        if (rng() % 2) continue;
        GroundElement r(ctx->field(), ctx->n());
        for (int i = 0; i < ctx->n(); ++i) {
            long long v = static_cast<long long>(rng() % 5) - 2;
            r[i] = Scalar::from_int(ctx->field(), v);
        }
        x.set_term(g, r);
    }
    return x;
}

}  // namespace

TEST_CASE("skew multiplication hand expansions") {
    ContextPtr ctx = swap_ring();
    const int g = 1;  // the swap
    SkewElement e1 = SkewElement::monomial(ctx, 1, ctx->group().identity());
    SkewElement e2g = SkewElement::monomial(ctx, 2, g);
    SkewElement x = e1 + e2g;
    // (e1 + e2 g)^2 = e1 + e2 g: e2 g e1 = e2 (g e1) g = e2 g, e2 g e2 g = 0
    CHECK(skew_mul(x, x) == x);
    SkewElement e1g = SkewElement::monomial(ctx, 1, g);
    CHECK(skew_mul(e1g, e1g).is_zero());
    SkewElement one = SkewElement::one(ctx);
    CHECK(skew_mul(one, x) == x);
    CHECK(skew_mul(x, one) == x);
    CHECK(x.length() == 2);
    CHECK(x.support_groups() == std::vector<int>{0, 1});
}

TEST_CASE("context mismatch is rejected") {
    ContextPtr a = swap_ring();
    ContextPtr b = cycle4_ring();
    CHECK_THROWS_AS(skew_mul(SkewElement::one(a), SkewElement::one(b)), ContextMismatch);
    // equal content: distinct pointers, same fingerprint
    ContextPtr c = swap_ring();
    CHECK(a->fingerprint() == c->fingerprint());
    CHECK_NOTHROW(skew_mul(SkewElement::one(a), SkewElement::one(c)));
}

TEST_CASE("conjugation examples") {
    ContextPtr ctx = swap_ring();
    SkewElement e1 = SkewElement::monomial(ctx, 1, 0);
    SkewElement e2 = SkewElement::monomial(ctx, 2, 0);
    CHECK(conjugate(1, e1) == e2);
    CHECK(conjugate(0, e1) == e1);

    ContextPtr c4 = cycle4_ring();
    std::mt19937_64 rng(0xC041ULL);
    for (int trial = 0; trial < 20; ++trial) {
        SkewElement x = random_element(c4, rng);
        for (int g = 0; g < 4; ++g) {
            // direct multiplication oracle: g x g^-1
            SkewElement gel = SkewElement::term(c4, g, GroundElement::ones(Q, 4));
            SkewElement ginv =
                SkewElement::term(c4, c4->group().inverse(g), GroundElement::ones(Q, 4));
            CHECK(conjugate(g, x) == skew_mul(skew_mul(gel, x), ginv));
            CHECK(conjugate(g, x).length() == x.length());
        }
    }
}

TEST_CASE("regular representation examples") {
    ContextPtr ctx = swap_ring();
    CHECK(regular_rep(SkewElement::one(ctx)) == Matrix::identity(Q, 4));

    SkewElement g = SkewElement::term(ctx, 1, GroundElement::ones(Q, 2));
    Matrix mg = regular_rep(g);
    CHECK_FALSE(mg == Matrix::identity(Q, 4));
    CHECK(mg * mg == Matrix::identity(Q, 4));
    // permutation matrix: each column has exactly one 1
    for (std::size_t c = 0; c < 4; ++c) {
        int nonzero = 0;
        for (std::size_t r = 0; r < 4; ++r)
            if (!mg.at(r, c).is_zero()) {
                ++nonzero;
                CHECK(mg.at(r, c).is_one());
            }
        CHECK(nonzero == 1);
    }

    // e1: diagonal 0/1 of rank |G| matching the support pattern
    Matrix me = regular_rep(SkewElement::monomial(ctx, 1, 0));
    int diag_ones = 0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            if (r == c && !me.at(r, c).is_zero()) {
                CHECK(me.at(r, c).is_one());
                ++diag_ones;
            }
            if (r != c) CHECK(me.at(r, c).is_zero());
        }
    CHECK(diag_ones == 2);
}

TEST_CASE("regular representation is multiplicative") {
    std::mt19937_64 rng(0x8E9ULL);
    ContextPtr ctx = cycle4_ring();
    for (int trial = 0; trial < 15; ++trial) {
        SkewElement x = random_element(ctx, rng);
        SkewElement y = random_element(ctx, rng);
        CHECK(regular_rep(skew_mul(x, y)) == regular_rep(x) * regular_rep(y));
        CHECK(skew_mul(x, y).length() <= x.length() * y.length());
    }
}

TEST_CASE("unit detection") {
    ContextPtr ctx = swap_ring();
    SkewElement g = SkewElement::term(ctx, 1, GroundElement::ones(Q, 2));
    auto u = is_unit(g);
    CHECK(u.unit);
    REQUIRE(u.inverse.has_value());
    CHECK(*u.inverse == g);  // the swap has order 2

    CHECK_FALSE(is_unit(SkewElement::monomial(ctx, 1, 0)).unit);
    SkewElement idem = SkewElement::monomial(ctx, 1, 0) + SkewElement::monomial(ctx, 2, 1);
    CHECK_FALSE(is_unit(idem).unit);

    std::mt19937_64 rng(0x17ULL);
    for (int trial = 0; trial < 25; ++trial) {
        SkewElement x = random_element(ctx, rng);
        auto r = is_unit(x);
        if (r.unit) {
            CHECK(skew_mul(x, *r.inverse) == SkewElement::one(ctx));
            CHECK(skew_mul(*r.inverse, x) == SkewElement::one(ctx));
        }
    }
}

TEST_CASE("skew quasi-inverse examples") {
    ContextPtr ctx = swap_ring();
    SkewElement e1g = SkewElement::monomial(ctx, 1, 1);
    auto y = skew_quasi_inverse(e1g);
    REQUIRE(y.has_value());
    CHECK(*y == SkewElement::monomial(ctx, 2, 1));  // the matrix-unit partner
    CHECK(skew_mul(skew_mul(e1g, *y), e1g) == e1g);

    auto zero = skew_quasi_inverse(SkewElement::zero(ctx));
    REQUIRE(zero.has_value());
    CHECK(zero->is_zero());
}

TEST_CASE("regularity fails in GF(2)[Z2]") {
    ContextPtr ctx = group_algebra_z2(Field::gf(2));
    SkewElement x = SkewElement::one(ctx) + SkewElement::term(ctx, 1, GroundElement::ones(ctx->field(), 1));
    CHECK_FALSE(skew_quasi_inverse(x).has_value());
    // exhaustive oracle over all 4 elements of GF(2)[Z2]
    std::vector<SkewElement> all;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            SkewElement y = SkewElement::zero(ctx);
            if (a) y = y + SkewElement::one(ctx);
            if (b) y = y + SkewElement::term(ctx, 1, GroundElement::ones(ctx->field(), 1));
            all.push_back(y);
        }
    for (const auto& y : all) CHECK_FALSE(skew_mul(skew_mul(x, y), x) == x);
}

TEST_CASE("quasi-inverses exist everywhere over Q") {
    std::mt19937_64 rng(0xA11CEULL);
    for (const ContextPtr& ctx : {swap_ring(), cycle4_ring()}) {
        for (int trial = 0; trial < 25; ++trial) {
            SkewElement x = random_element(ctx, rng);
            auto y = skew_quasi_inverse(x);
            REQUIRE(y.has_value());
            CHECK(skew_mul(skew_mul(x, *y), x) == x);
        }
    }
}

TEST_CASE("vector round trip follows the fixed basis order") {
    ContextPtr ctx = swap_ring();
    SkewElement x = SkewElement::monomial(ctx, 2, 1);  // e_2 g
    auto v = x.to_vector();
    // basis index = g * n + (i - 1); e_2 g sits at 1*2 + 1 = 3
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i].is_zero() == (i != 3));
    CHECK(SkewElement::from_vector(ctx, v) == x);
}
