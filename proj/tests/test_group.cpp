#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sgr/action.hpp"

using namespace sgr;

namespace {

const Field Q = Field::rationals();

Action cyclic4() { return Action::from_generators({{"a", Permutation({2, 3, 4, 1})}}); }
Action swap_on3() { return Action::from_generators({{"a", Permutation({2, 1, 3})}}); }
Action s3_natural() {
    return Action::from_generators({{"a", Permutation({2, 1, 3})}, {"b", Permutation({1, 3, 2})}});
}

int resolve(const Action& act, const Permutation& p) {
    for (int g = 0; g < act.group().order(); ++g)
        if (act.perm(g) == p) return g;
    throw std::runtime_error("permutation not found");
}

// brute force: alpha(g) is the identity on e'R iff g fixes supp(e') pointwise
bool identity_on(const Action& act, int g, unsigned mask) {
    for (int i = 1; i <= act.degree(); ++i)
        if ((mask >> (i - 1)) & 1)
            if (act.perm(g)(i) != i) return false;
    return true;
}

Action random_cyclic(std::mt19937_64& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
    return Action::from_generators({{"a", Permutation(img)}});
}

}  // namespace

TEST_CASE("group generation examples") {
    CHECK(cyclic4().group().order() == 4);
    CHECK(swap_on3().group().order() == 2);
    // closure enumeration oracle: the two generators reach all 6 permutations
    Action s3 = s3_natural();
    CHECK(s3.group().order() == 6);
    std::vector<int> base{1, 2, 3};
    do {
        Permutation p{std::vector<int>(base)};
        bool found = false;
        for (int g = 0; g < 6 && !found; ++g) found = s3.perm(g) == p;
        CHECK(found);
    } while (std::next_permutation(base.begin(), base.end()));
    CHECK(s3.group().label(s3.group().identity()) == "1");
    CHECK_THROWS_AS(Action::from_generators({{"a", Permutation({2, 3, 4, 1})}}, 3),
                    OrderBoundExceeded);
}

TEST_CASE("group table machinery") {
    FiniteGroup z6 = FiniteGroup::cyclic(6);
    CHECK(z6.element_order(1) == 6);
    CHECK(z6.inverse(1) == 5);
    CHECK(z6.abelian());
    FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    CHECK(v4.order() == 4);
    for (int g = 0; g < 4; ++g) CHECK(v4.mul(g, g) == v4.identity());
    // subgroup enumeration against known counts
    CHECK(FiniteGroup::cyclic(6).all_subgroups().size() == 4);  // 1, Z2, Z3, Z6
    CHECK(s3_natural().group().all_subgroups().size() == 6);    // 1, 3xZ2, Z3, S3
    // broken tables rejected
    CHECK_THROWS_AS(FiniteGroup({"1", "g"}, {{0, 1}, {1, 1}}), SchemaError);
}

TEST_CASE("orbits examples") {
    CHECK(orbits(cyclic4()) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(orbits(swap_on3()) == std::vector<std::vector<int>>{{1, 2}, {3}});
    Action trivial(FiniteGroup::trivial(), 2, {Permutation::identity(2)});
    CHECK(orbits(trivial) == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("g-simplicity and the invariant-subset brute force") {
    CHECK(is_g_simple(cyclic4(), Q).g_simple);
    Action trivial1(FiniteGroup::trivial(), 1, {Permutation::identity(1)});
    CHECK(is_g_simple(trivial1, Q).g_simple);

    auto res = is_g_simple(swap_on3(), Q);
    CHECK_FALSE(res.g_simple);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == GroundElement::indicator(Q, 3, {1, 2}));

    // oracle: scan all 2^n coordinate subsets for proper invariant ones
    for (const Action& act : {cyclic4(), swap_on3(), s3_natural()}) {
        const int n = act.degree();
        bool has_proper_invariant = false;
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            bool invariant = true;
            for (int g = 0; g < act.group().order() && invariant; ++g)
                for (int i = 1; i <= n && invariant; ++i)
                    if ((mask >> (i - 1)) & 1)
                        invariant = (mask >> (act.perm(g)(i) - 1)) & 1;
            if (invariant) has_proper_invariant = true;
        }
        auto gs = is_g_simple(act, Q);
        CHECK(gs.g_simple == !has_proper_invariant);
        if (gs.witness) {
            // the witness support is an invariant subset
            unsigned mask = 0;
            for (int i : support(*gs.witness)) mask |= 1u << (i - 1);
            bool invariant = true;
            for (int g = 0; g < act.group().order() && invariant; ++g)
                for (int i = 1; i <= n && invariant; ++i)
                    if ((mask >> (i - 1)) & 1) invariant = (mask >> (act.perm(g)(i) - 1)) & 1;
            CHECK(invariant);
        }
    }
}

TEST_CASE("automorphism classification examples") {
    Action s3 = s3_natural();
    int swap12 = resolve(s3, Permutation({2, 1, 3}));
    auto cls = classify_automorphism(s3, swap12, Q);
    CHECK(cls.cls == AutClass::XInner);
    REQUIRE(cls.fixed_idempotent.has_value());
    CHECK(*cls.fixed_idempotent == GroundElement::indicator(Q, 3, {3}));
    CHECK(cls.annihilator_matches);

    Action c4 = cyclic4();
    auto cls2 = classify_automorphism(c4, 1, Q);
    CHECK(cls2.cls == AutClass::XOuter);
    CHECK(cls2.annihilator_matches);

    auto cls3 = classify_automorphism(c4, c4.group().identity(), Q);
    CHECK(cls3.cls == AutClass::Identity);
}

TEST_CASE("classification against the exhaustive idempotent search") {
    std::mt19937_64 rng(0xC1A551F1ULL);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Action act = random_cyclic(rng, n);
        int g = static_cast<int>(rng() % act.group().order());
        auto cls = classify_automorphism(act, g, Q);
        CHECK(cls.annihilator_matches);
        // brute force over all 2^n idempotents
        unsigned best = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            if (identity_on(act, g, mask) && __builtin_popcount(mask) > __builtin_popcount(best))
                best = mask;
        if (act.perm(g).is_identity()) {
            CHECK(cls.cls == AutClass::Identity);
        } else if (best != 0) {
            CHECK(cls.cls == AutClass::XInner);
            unsigned got = 0;
            for (int i : support(*cls.fixed_idempotent)) got |= 1u << (i - 1);
            CHECK(got == best);
        } else {
            CHECK(cls.cls == AutClass::XOuter);
        }
    }
}

TEST_CASE("corner-inner witnesses") {
    Action s3 = s3_natural();
    int swap12 = resolve(s3, Permutation({2, 1, 3}));
    auto w = corner_inner_witness(s3, swap12, Q);
    REQUIRE(w.has_value());
    GroundElement e3 = GroundElement::indicator(Q, 3, {3});
    CHECK(w->e == e3);
    CHECK(w->e_prime == e3);
    CHECK(w->u == e3);
    CHECK(w->v == e3);
    CHECK(verify_corner_inner_witness(s3, swap12, *w));

    CHECK_FALSE(corner_inner_witness(cyclic4(), 1, Q).has_value());

    Action id2(FiniteGroup::trivial(), 2, {Permutation::identity(2)});
    auto w2 = corner_inner_witness(id2, 0, Q);
    REQUIRE(w2.has_value());
    CHECK(w2->e == GroundElement::ones(Q, 2));
    CHECK(verify_corner_inner_witness(id2, 0, *w2));

    // tampering breaks verification
    CornerInnerWitness bad = *w;
    bad.u = GroundElement::indicator(Q, 3, {1});
    CHECK_FALSE(verify_corner_inner_witness(s3, swap12, bad));
    CornerInnerWitness bad2 = *w;
    bad2.e = GroundElement(Q, {Scalar::from_int(Q, 2), Scalar::zero(Q), Scalar::zero(Q)});
    CHECK_FALSE(verify_corner_inner_witness(s3, swap12, bad2));
}

TEST_CASE("corner-inner witness exists iff the fixed set is nonempty") {
    std::mt19937_64 rng(0xC0FFEEULL);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Action act = random_cyclic(rng, n);
        for (int g = 0; g < act.group().order(); ++g) {
            auto cls = classify_automorphism(act, g, Q);
            auto w = corner_inner_witness(act, g, Q);
            CHECK(w.has_value() == (cls.cls != AutClass::XOuter));
            if (w) CHECK(verify_corner_inner_witness(act, g, *w));
        }
    }
}

TEST_CASE("action predicates") {
    Action swap2 = Action::from_generators({{"a", Permutation({2, 1})}});
    auto p = action_predicates(swap2);
    CHECK(p.faithful);
    CHECK(p.outer);
    CHECK(p.abelian);
    CHECK(p.x_outer);
    CHECK(p.fixed_point_free);

    // Z2 acting trivially on k: explicit non-faithful table
    Action triv(FiniteGroup::cyclic(2), 1,
                {Permutation::identity(1), Permutation::identity(1)});
    auto q = action_predicates(triv);
    CHECK_FALSE(q.faithful);
    CHECK_FALSE(q.outer);
    REQUIRE(q.faithful_witness.has_value());
    CHECK(*q.faithful_witness != triv.group().identity());

    auto r = action_predicates(s3_natural());
    CHECK(r.faithful);
    CHECK(r.outer);
    CHECK_FALSE(r.abelian);
    CHECK_FALSE(r.x_outer);
    REQUIRE(r.x_inner_witness.has_value());
    CHECK_FALSE(s3_natural().perm(*r.x_inner_witness).fixed_points().empty());
}

TEST_CASE("transitive faithful abelian actions are free") {
    std::mt19937_64 rng(0xFACEULL);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Action act = random_cyclic(rng, n);
        auto p = action_predicates(act);
        if (p.abelian && p.faithful && is_transitive(act)) {
            ++checked;
            CHECK(is_free(act));
        }
    }
    CHECK(checked > 0);
}
