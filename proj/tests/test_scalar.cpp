#include <doctest.h>

#include <random>

#include "sgr/ground.hpp"
#include "sgr/scalar.hpp"

using namespace sgr;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::gf(5);

GroundElement random_ground(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.rational()) {
            long long num = static_cast<long long>(rng() % 11) - 5;
            long long den = 1 + static_cast<long long>(rng() % 4);
            c.push_back(Scalar::from_rat(BigRat(num, den)));
        } else {
            c.push_back(Scalar::from_int(f, static_cast<long long>(rng() % f.characteristic())));
        }
    }
    return GroundElement(f, std::move(c));
}

}  // namespace

TEST_CASE("field construction and parsing") {
    CHECK(Q.rational());
    CHECK(F5.characteristic() == 5);
    CHECK_THROWS_AS(Field::gf(6), NotPrime);
    CHECK_THROWS_AS(Field::gf(1), NotPrime);
    CHECK(Field::parse("q") == Q);
    CHECK(Field::parse("p=7") == Field::gf(7));
    CHECK_THROWS_AS(Field::parse("p=9"), NotPrime);
    CHECK_THROWS_AS(Field::parse("xyz"), SchemaError);
}

TEST_CASE("rational scalars are reduced with positive denominator") {
    Scalar a = Scalar::parse(Q, "4/6");
    CHECK(a.str() == "2/3");
    Scalar b = Scalar::parse(Q, "-3/-9");
    CHECK(b.str() == "1/3");
    Scalar c = Scalar::parse(Q, "2/-4");
    CHECK(c.str() == "-1/2");
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
}

TEST_CASE("mod-p scalars reduce into [0, p)") {
    Scalar a = Scalar::from_int(F5, -3);
    CHECK(a.residue() == 2);
    Scalar b = Scalar::from_int(F5, 12);
    CHECK((a * b).residue() == (2 * 2) % 5);
    CHECK((a + b).residue() == 4);
    CHECK((b.inverse() * b).is_one());
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F5), FieldMismatch);
}

TEST_CASE("ground arithmetic examples") {
    // (1,2)*(3,4) = (3,8) over Q
    GroundElement a(Q, {Scalar::from_int(Q, 1), Scalar::from_int(Q, 2)});
    GroundElement b(Q, {Scalar::from_int(Q, 3), Scalar::from_int(Q, 4)});
    GroundElement ab = a * b;
    CHECK(ab[0] == Scalar::from_int(Q, 3));
    CHECK(ab[1] == Scalar::from_int(Q, 8));

    // (1,0)+(0,1) = identity
    CHECK(GroundElement::unit(Q, 2, 1) + GroundElement::unit(Q, 2, 2) ==
          GroundElement::ones(Q, 2));

    // (3,4)*(2,2) over GF(5) = (1,3)
    GroundElement c(F5, {Scalar::from_int(F5, 3), Scalar::from_int(F5, 4)});
    GroundElement d(F5, {Scalar::from_int(F5, 2), Scalar::from_int(F5, 2)});
    GroundElement cd = c * d;
    CHECK(cd[0] == Scalar::from_int(F5, 1));
    CHECK(cd[1] == Scalar::from_int(F5, 3));

    CHECK_THROWS_AS(a + GroundElement::ones(Q, 3), DimensionMismatch);
    CHECK_THROWS_AS(a + GroundElement::ones(F5, 2), FieldMismatch);
}

TEST_CASE("quasi-inverse examples") {
    GroundElement a(Q, {Scalar::from_int(Q, 2), Scalar::zero(Q), Scalar::from_int(Q, 3)});
    GroundElement x = quasi_inverse(a);
    CHECK(x[0] == Scalar::parse(Q, "1/2"));
    CHECK(x[1].is_zero());
    CHECK(x[2] == Scalar::parse(Q, "1/3"));
    CHECK(a * x * a == a);
    CHECK(x * a * x == x);

    CHECK(quasi_inverse(GroundElement(Q, 2)).is_zero());

    GroundElement c(F5, {Scalar::from_int(F5, 3), Scalar::from_int(F5, 4)});
    GroundElement y = quasi_inverse(c);
    CHECK(y[0] == Scalar::from_int(F5, 2));
    CHECK(y[1] == Scalar::from_int(F5, 4));
}

TEST_CASE("support idempotent examples") {
    GroundElement a(Q, {Scalar::from_int(Q, 2), Scalar::zero(Q), Scalar::from_int(Q, 3)});
    GroundElement e = support_idempotent(a);
    CHECK(e == GroundElement::indicator(Q, 3, {1, 3}));
    CHECK(is_idempotent(e));
    CHECK(e * a == a);
    CHECK(support_idempotent(GroundElement(Q, 4)).is_zero());
    // 5 = 0 in GF(5)
    GroundElement f(F5, {Scalar::from_int(F5, 5), Scalar::from_int(F5, 5)});
    CHECK(support_idempotent(f).is_zero());
}

TEST_CASE("ground ring properties on random vectors") {
    std::mt19937_64 rng(0xABCDEF12345ULL);
    for (const Field& f : {Q, F5}) {
        for (int trial = 0; trial < 50; ++trial) {
            GroundElement a = random_ground(f, 5, rng);
            GroundElement b = random_ground(f, 5, rng);
            GroundElement c = random_ground(f, 5, rng);
            GroundElement x = quasi_inverse(a);
            CHECK(a * x * a == a);
            CHECK(x * a * x == x);
            GroundElement e = support_idempotent(a);
            CHECK(e * e == e);
            CHECK(e * a == a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}
