#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adlv/invariants.hpp"

using namespace adlv;

static std::vector<int> id_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    return p;
}

TEST_CASE("kottwitz and newton of PGL2 elements") {
    RootDatum a1("A1", 1, id_perm(1));
    ExtAff tau{Vec{1}, Weyl{{0}}};  // t^{omega^vee} s1, length 0
    auto ci = invariants_of(a1, tau);
    CHECK(ci.kappa_key == pi1_coinvariants(a1).canonical_coords(Vec{1}));
    CHECK(ci.nu == RatVec{Rat(0)});
    CHECK(pi1_coinvariants(a1).order() == 2);

    auto ct = invariants_of(a1, aff_translation(Vec{3}));
    CHECK(ct.nu == RatVec{Rat(3)});
    CHECK(ct.kappa_key == ci.kappa_key);  // 3 == 1 mod 2
}

TEST_CASE("coinvariants shrink under nontrivial sigma") {
    // A2 with flip: pi1 = Z/3 but (1-sigma)Y kills it -> trivial coinvariants
    RootDatum a2f("A2", 1, std::vector<int>{1, 0});
    CHECK(pi1_G(a2f).order() == 3);
    CHECK(pi1_coinvariants(a2f).order() == 1);
    // split A2 keeps Z/3
    RootDatum a2("A2", 1, id_perm(2));
    CHECK(pi1_coinvariants(a2).order() == 3);
    // A1 x A1 with swap: (Z/2)^2 -> Z/2
    RootDatum a11("A1", 2, std::vector<int>{1, 0});
    CHECK(pi1_G(a11).order() == 4);
    CHECK(pi1_coinvariants(a11).order() == 2);
}

TEST_CASE("invariants are sigma-conjugation invariant") {
    RootDatum d("A2", 1, std::vector<int>{1, 0});
    ExtAff b{Vec{2, -1}, Weyl{{0, 1}}};
    auto ci = invariants_of(d, b);
    for (const auto& sa : simple_affine(d)) {
        ExtAff y = aff_mul(d, aff_mul(d, sa.s, b), aff_sigma(d, sa.s));
        auto cj = invariants_of(d, y);
        CHECK(cj.kappa_key == ci.kappa_key);
        CHECK(cj.nu == ci.nu);
    }
}

TEST_CASE("basic and superbasic") {
    RootDatum a1("A1", 1, id_perm(1));
    ExtAff tau{Vec{1}, Weyl{{0}}};
    CHECK(is_basic(a1, tau));
    CHECK(is_basic(a1, aff_identity(a1)));
    CHECK(!is_basic(a1, aff_translation(Vec{2})));
    // basic => nu = 0 for these adjoint data
    CHECK(invariants_of(a1, tau).nu == RatVec{Rat(0)});

    // identity fixes each simple reflection, so orbits are singletons: not superbasic
    CHECK(!is_superbasic_omega(a1, aff_identity(a1)));
    // tau swaps s0 and s1 in affine A1: the single orbit is the whole diagram
    CHECK(is_superbasic_omega(a1, tau));
    // non-Omega input is a domain error
    CHECK_THROWS_AS(is_superbasic_omega(a1, aff_translation(Vec{2})), domain_error);

    // A2: rotation tau is superbasic, identity is not
    RootDatum a2("A2", 1, id_perm(2));
    ExtAff om = omega_elem(a2, Vec{1, 0});
    CHECK(length(a2, om) == 0);
    CHECK(is_superbasic_omega(a2, om));
    CHECK(!is_superbasic_omega(a2, aff_identity(a2)));
}

TEST_CASE("coroot coefficients") {
    RootDatum a2("A2", 1, id_perm(2));
    // alpha1^vee = (2,-1) in coweight coords
    auto c = coroot_coefficients(a2, RatVec{Rat(2), Rat(-1)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rat(1));
    CHECK((*c)[1] == Rat(0));
    // omega1^vee = (1,0) = (2/3) a1 + (1/3) a2
    auto c2 = coroot_coefficients(a2, RatVec{Rat(1), Rat(0)});
    REQUIRE(c2.has_value());
    CHECK((*c2)[0] == Rat(2, 3));
    CHECK((*c2)[1] == Rat(1, 3));
}

TEST_CASE("nonemptiness criterion in PGL2") {
    RootDatum a1("A1", 1, id_perm(1));
    ExtAff one = aff_identity(a1);
    ExtAff tau{Vec{1}, Weyl{{0}}};
    // lam = alpha^vee, b = 1: kappa match, diff = 2 = 1*alpha^vee >= 0
    CHECK(nonempty(a1, Vec{2}, one));
    // lam = omega^vee, b = 1: kappa mismatch
    CHECK(!nonempty(a1, Vec{1}, one));
    // lam = omega^vee, b = tau: kappa match, diff = 1/2 alpha^vee > 0
    CHECK(nonempty(a1, Vec{1}, tau));
    CHECK(hn_irreducible(a1, Vec{1}, tau));
    // lam = alpha^vee, b = t^{alpha^vee}: diff = 0, nonempty but not HN-irreducible
    CHECK(nonempty(a1, Vec{2}, aff_translation(Vec{2})));
    CHECK(!hn_irreducible(a1, Vec{2}, aff_translation(Vec{2})));
    // too-large b is excluded
    CHECK(!nonempty(a1, Vec{2}, aff_translation(Vec{4})));
    // domain errors
    CHECK_THROWS_AS(nonempty(a1, Vec{-2}, one), domain_error);
    CHECK_THROWS_AS(hn_irreducible(a1, Vec{1}, one), domain_error);
}

TEST_CASE("nonemptiness is monotone in lam") {
    RootDatum a2("A2", 1, id_perm(2));
    ExtAff b = aff_translation(Vec{1, 1});
    for (const Vec& lp : dominant_below(a2, Vec{2, 2})) {
        if (nonempty(a2, lp, b)) CHECK(nonempty(a2, Vec{2, 2}, b));
        if (a2.preceq(Vec{1, 1}, lp)) CHECK(nonempty(a2, lp, b));
    }
}
