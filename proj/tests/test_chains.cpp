#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "adlv/chains.hpp"

using namespace adlv;

static std::vector<int> id_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    return p;
}

static Vec vadd(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); i++) c[i] = a[i] + b[i];
    return c;
}

// property check for contraction output (value is not pinned)
static void check_contraction(const RootDatum& d, const Vec& delta, const Vec& deltap,
                              const std::vector<int>& gs) {
    Vec sum(d.rank(), 0), pos(d.rank(), 0), neg(d.rank(), 0);
    for (int g : gs) {
        const Vec& cc = d.root(g).cc;
        bool isneg = false;
        for (long long v : cc)
            if (v < 0) isneg = true;
        for (int i = 0; i < d.rank(); i++) {
            sum[i] += cc[i];
            (isneg ? neg : pos)[i] += cc[i];
        }
        for (int g2 : gs) CHECK(d.pairing_rr(g, g2) >= 0);
    }
    for (int i = 0; i < d.rank(); i++) {
        CHECK(sum[i] == deltap[i] - delta[i]);
        // coroot coords of a root are sign-uniform, so the extreme subset
        // sums are the all-positive and all-negative ones
        CHECK(pos[i] <= deltap[i]);
        CHECK(-neg[i] <= delta[i]);
    }
}

TEST_CASE("theta sets") {
    RootDatum a2("A2", 1, id_perm(2));
    Vec lam{1, 1};
    // mu = theta^vee, mu' = 0: Theta = {theta}, Xi empty
    auto ts = theta_sets(a2, Vec{1, 1}, Vec{0, 0}, lam);
    REQUIRE(ts.theta.size() == 1);
    CHECK(a2.root(ts.theta[0]).rc == Vec{1, 1});
    CHECK(ts.xi.empty());
    CHECK(ts.xi1.empty());
    // mu = mu': Theta empty
    CHECK(theta_sets(a2, Vec{1, 1}, Vec{1, 1}, lam).theta.empty());
    // W-equivariance: w = s1
    auto tw = theta_sets(a2, a2.sref_co(0, Vec{1, 1}), a2.sref_co(0, Vec{0, 0}), lam);
    REQUIRE(tw.theta.size() == 1);
    CHECK(tw.theta[0] == a2.weyl_act_root(Weyl{{0}}, ts.theta[0]));
    // precondition
    CHECK_THROWS_AS(theta_sets(a2, Vec{3, 3}, Vec{0, 0}, lam), domain_error);
    // nonemptiness on a small window (mu != mu' both preceq lam)
    for (const Vec& xi : dominant_below(a2, lam))
        for (const Weyl& w : a2.weyl_elements())
            for (const Weyl& w2 : a2.weyl_elements()) {
                Vec m = a2.weyl_act(w, xi);
                for (const Vec& xi2 : dominant_below(a2, lam)) {
                    Vec mp = a2.weyl_act(w2, xi2);
                    if (m == mp) continue;
                    CHECK(!theta_sets(a2, m, mp, lam).theta.empty());
                }
            }
}

TEST_CASE("simultaneous dominant representative") {
    RootDatum b2("B2", 1, id_perm(2));
    for (const Vec& xi : dominant_below(b2, Vec{2, 2}))
        for (const Weyl& w : b2.weyl_elements()) {
            Vec m = b2.weyl_act(w, xi), mp = b2.weyl_act(w, Vec{1, 0});
            // Xi(m, mp) empty => a common dominating w exists
            bool xi_empty = true;
            for (int r = 0; r < b2.num_roots() && xi_empty; r++)
                if (b2.pairing(r, m) >= 1 && b2.pairing(r, mp) <= -1) xi_empty = false;
            if (xi_empty) CHECK(simultaneous_dominant(b2, m, mp).has_value());
        }
}

TEST_CASE("contraction decomposition") {
    RootDatum a2("A2", 1, id_perm(2));
    CHECK(contraction(a2, Vec{1, 0}, Vec{1, 0}).empty());
    check_contraction(a2, Vec{1, 0}, Vec{0, 1}, contraction(a2, Vec{1, 0}, Vec{0, 1}));
    check_contraction(a2, Vec{0, 0}, Vec{1, 1}, contraction(a2, Vec{0, 0}, Vec{1, 1}));
    RootDatum b2("B2", 1, id_perm(2));
    for (long long a = 0; a <= 2; a++)
        for (long long b = 0; b <= 2; b++)
            for (long long c = 0; c <= 2; c++)
                for (long long e = 0; e <= 2; e++)
                    check_contraction(b2, Vec{a, b}, Vec{c, e},
                                      contraction(b2, Vec{a, b}, Vec{c, e}));
}

TEST_CASE("key root walk") {
    RootDatum a2("A2", 1, id_perm(2));
    // mu = (-1,2), alpha = -alpha1: mu + alpha^vee = (-3,3) <= theta^vee, not preceq
    int malpha1 = a2.negate_root(a2.simple_root(0));
    auto kr = key_gamma(a2, Vec{-1, 2}, malpha1, Vec{1, 1});
    CHECK(a2.root(kr.gamma).pos);
    CHECK(a2.pairing(kr.gamma, Vec{-3, 3}) <= -2);
    // preconditions rejected
    CHECK_THROWS_AS(key_gamma(a2, Vec{0, 0}, a2.simple_root(0), Vec{1, 1}), domain_error);
    // B2 sweep with dominant mu: the certificate is asserted internally
    RootDatum b2("B2", 1, id_perm(2));
    int hits = 0, blong = 0;
    for (long long l1 = 0; l1 <= 3; l1++)
        for (long long l2 = 0; l2 <= 3; l2++)
            for (long long m1 = 0; m1 <= 3; m1++)
                for (long long m2 = 0; m2 <= 3; m2++)
                    for (int al = 0; al < b2.num_roots(); al++) {
                        Vec lam{l1, l2}, mu{m1, m2};
                        Vec m0 = vadd(mu, b2.coroot_co(al));
                        if (!b2.leq(m0, lam) || b2.preceq(m0, lam)) continue;
                        auto res = key_gamma(b2, mu, al, lam);
                        hits++;
                        if (res.clause_b && !res.clause_a) blong++;
                    }
    CHECK(hits > 0);
    CHECK(blong > 0);  // clause (b) exercised with a long gamma
}

TEST_CASE("weakly dominant orthogonal set") {
    RootDatum a2("A2", 1, id_perm(2));
    CHECK(weak_orthogonal_D(a2, Vec{1, 1}).empty());  // dominant
    auto D = weak_orthogonal_D(a2, Vec{1, -1});
    REQUIRE(D.size() == 1);
    CHECK(a2.root(D[0]).rc == Vec{0, 1});
    CHECK_THROWS_AS(weak_orthogonal_D(a2, Vec{0, -2}), domain_error);
    RootDatum b2("B2", 1, id_perm(2));
    CHECK_THROWS_AS(weak_orthogonal_D(b2, Vec{0, 0}), domain_error);  // not simply laced
    // D4: -omega_center^vee pairs to -2 with the highest root: not weakly dominant
    RootDatum d4("D4", 1, id_perm(4));
    CHECK_THROWS_AS(weak_orthogonal_D(d4, Vec{0, -1, 0, 0}), domain_error);
    // sweep: postconditions are asserted inside for every weakly dominant mu
    int n = 0;
    for (const Vec& xi : dominant_below(d4, Vec{1, 0, 0, 0}))
        for (const Weyl& w : d4.weyl_elements()) {
            Vec mu = d4.weyl_act(w, xi);
            if (!d4.is_weakly_dominant(mu)) continue;
            weak_orthogonal_D(d4, mu);
            n++;
        }
    CHECK(n > 0);
}

TEST_CASE("conv chain") {
    RootDatum a2f("A2", 1, std::vector<int>{1, 0});
    Vec lam{1, 1}, mu{2, -1}, ups{-1, 2};  // alpha1^vee -> alpha2^vee, flip sigma
    auto chain = conv_chain(a2f, mu, ups, lam);
    CHECK(chain.size() == 1);
    CHECK(check_conv_chain(a2f, mu, ups, lam, chain));
    CHECK(conv_chain(a2f, mu, mu, lam).empty());
    // difference outside (1-sigma)Y rejected
    CHECK_THROWS_AS(conv_chain(a2f, Vec{1, 1}, Vec{0, 0}, lam), domain_error);
    // a longer split-sigma case is impossible: (1-sigma)Y = 0 forces mu = ups
    RootDatum a2("A2", 1, id_perm(2));
    CHECK(conv_chain(a2, Vec{1, 1}, Vec{1, 1}, Vec{1, 1}).empty());
    // sweep on the flip datum: every chain verifies
    for (const Vec& xi : dominant_below(a2f, Vec{2, 2}))
        for (const Weyl& w : a2f.weyl_elements()) {
            Vec m = a2f.weyl_act(w, xi);
            for (const Vec& xi2 : dominant_below(a2f, Vec{2, 2}))
                for (const Weyl& w2 : a2f.weyl_elements()) {
                    Vec u = a2f.weyl_act(w2, xi2);
                    Vec diff{m[0] - u[0], m[1] - u[1]};
                    // (1-sigma)Y for the flip = {(c,-c)}
                    if (diff[0] + diff[1] != 0) continue;
                    CHECK(check_conv_chain(a2f, m, u, Vec{2, 2},
                                           conv_chain(a2f, m, u, Vec{2, 2})));
                }
        }
}

TEST_CASE("step relation and refinement") {
    RootDatum a2("A2", 1, id_perm(2));
    std::vector<int> Je{};
    // split sigma, degenerate step x -> x with alpha^vee = sigma^r(alpha^vee)
    auto sr = step_relation(a2, Vec{1, 1}, Je, Vec{0, 0}, Vec{0, 0}, a2.simple_root(0), 1);
    CHECK(sr.arrow);
    CHECK(sr.tail);
    auto steps = refine_to_tail(a2, Vec{1, 1}, Je, Vec{0, 0}, Vec{0, 0}, a2.simple_root(0), 1);
    CHECK(steps.size() == 1);
    CHECK(check_chain_steps(a2, Vec{1, 1}, Je, Vec{0, 0}, Vec{0, 0}, steps));
    // J = S0 in rank 1: Phi - Phi_J is empty, no arrow
    RootDatum a1("A1", 1, id_perm(1));
    CHECK(!step_relation(a1, Vec{2}, {0}, Vec{0}, Vec{0}, a1.simple_root(0), 1).arrow);
    CHECK_THROWS_AS(refine_to_tail(a1, Vec{2}, {0}, Vec{0}, Vec{0}, a1.simple_root(0), 1),
                    domain_error);
}

TEST_CASE("beta_J") {
    RootDatum a2("A2", 1, id_perm(2));
    int theta = a2.root_index(Vec{1, 1});
    int a2nd = a2.simple_root(1);
    CHECK(beta_J(a2, theta, {0}) == a2nd);
    CHECK(beta_J(a2, a2nd, {0}) == a2nd);  // already J-anti-dominant J-minuscule
    CHECK_THROWS_AS(beta_J(a2, a2.simple_root(0), {0}), domain_error);
    // moreover-clause samples: mu J-dominant J-minuscule, mu+beta^vee preceq lam
    Vec lam{1, 1};
    for (const Vec& xi : dominant_below(a2, lam))
        for (const Weyl& w : a2.weyl_elements()) {
            Vec mu = a2.weyl_act(w, xi);
            if (!a2.is_dominant(mu, {0}) || !a2.is_minuscule(mu, {0})) continue;
            for (int r = 0; r < a2.num_roots(); r++) {
                if (a2.root(r).rc[1] == 0) continue;  // skip Phi_J
                Vec s = vadd(mu, a2.coroot_co(r));
                if (!a2.preceq(s, lam)) continue;
                CHECK(a2.preceq(vadd(mu, a2.coroot_co(beta_J(a2, r, {0}))), lam));
            }
        }
}

TEST_CASE("class chains between index set elements") {
    RootDatum a2f("A2", 1, std::vector<int>{1, 0});
    ExtAff b = aff_translation(Vec{2, -1});  // t^{alpha1^vee}
    Vec lam{1, 1};
    std::vector<int> Je{};
    auto idx = ibar(a2f, lam, Je, b);
    CHECK(std::count(idx.begin(), idx.end(), Vec{2, -1}));
    CHECK(std::count(idx.begin(), idx.end(), Vec{-1, 2}));
    auto chain = convv_chain(a2f, lam, Je, b, Vec{2, -1}, Vec{-1, 2});
    CHECK(!chain.empty());
    CHECK(check_chain_steps(a2f, lam, Je, Vec{2, -1}, Vec{-1, 2}, chain));
    CHECK(convv_chain(a2f, lam, Je, b, Vec{2, -1}, Vec{2, -1}).empty());
    // all pairs of the index set are connected
    for (const Vec& x : idx)
        for (const Vec& xp : idx)
            CHECK(check_chain_steps(a2f, lam, Je, x, xp,
                                    convv_chain(a2f, lam, Je, b, x, xp)));
    CHECK_THROWS_AS(convv_chain(a2f, lam, Je, b, Vec{1, 1}, Vec{2, -1}), domain_error);
}

TEST_CASE("C sets") {
    RootDatum a2("A2", 1, id_perm(2));
    // b = t^{theta^vee}, lam = theta^vee, x = theta^vee: Upsilon+ empty
    ExtAff b = aff_translation(Vec{1, 1});
    auto C = c_set(a2, Vec{1, 1}, {}, b, Vec{1, 1});
    CHECK(C.roots.empty());
    CHECK(!C.g2_modified);
    // b = 1 on the flip datum: x = 0, all three positive roots qualify
    RootDatum a2f("A2", 1, std::vector<int>{1, 0});
    auto C2 = c_set(a2f, Vec{1, 1}, {}, aff_identity(a2f), Vec{0, 0});
    CHECK(C2.roots.size() == 3);
    // G2 with short-orbit J: modified definition kicks in
    RootDatum g2("G2", 1, id_perm(2));
    auto Cg = c_set(g2, g2.coroot_co(g2.highest_root(0)), {0}, make_bx(g2, {0}, Vec{0, 0}).b,
                    Vec{0, 0});
    CHECK(Cg.g2_modified);
    for (int r : Cg.roots) CHECK(r == g2.simple_root(1));
}

TEST_CASE("orbit types and alpha tilde") {
    // split: every orbit is type I with alpha_tilde = alpha
    RootDatum a2("A2", 1, id_perm(2));
    auto t1 = orbit_type_and_tilde(a2, a2.simple_root(0), {});
    CHECK(t1.type == 1);
    CHECK(t1.alpha_tilde == a2.simple_root(0));
    CHECK(t1.d_min == 1);
    // A2 flip: type II, alpha_tilde = theta
    RootDatum a2f("A2", 1, std::vector<int>{1, 0});
    auto t2 = orbit_type_and_tilde(a2f, a2f.simple_root(0), {});
    CHECK(t2.type == 2);
    CHECK(a2f.root(t2.alpha_tilde).rc == Vec{1, 1});
    CHECK(t2.beta == -1);
    // D4 triality with J = {center}: type III through the common neighbor
    RootDatum d4t("D4", 1, std::vector<int>{2, 1, 3, 0});
    auto t3 = orbit_type_and_tilde(d4t, d4t.simple_root(0), {1});
    CHECK(t3.type == 3);
    CHECK(t3.d_min == 1);
    CHECK(t3.beta == d4t.simple_root(1));
    CHECK(d4t.root(t3.alpha_tilde).rc == Vec{1, 1, 1, 1});
    // guards
    CHECK_THROWS_AS(orbit_type_and_tilde(d4t, d4t.simple_root(1), {1}), domain_error);
}

TEST_CASE("coroot lattice span from C sets") {
    RootDatum a2f("A2", 1, std::vector<int>{1, 0});
    auto g = gen_span_check(a2f, Vec{1, 1}, {}, aff_identity(a2f), Vec{0, 0});
    CHECK(g.ok);
    CHECK(!g.generators.empty());
    // J = S0 is trivially spanning
    RootDatum a1("A1", 1, id_perm(1));
    ExtAff tau{Vec{1}, Weyl{{0}}};
    CHECK(gen_span_check(a1, Vec{1}, {0}, tau, Vec{1}).ok);
    // guard: non-HN-irreducible input refused
    CHECK_THROWS_AS(gen_span_check(a1, Vec{2}, {}, aff_translation(Vec{2}), Vec{2}),
                    domain_error);
}
