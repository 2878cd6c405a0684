#include "adlv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace adlv {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); i++) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string j_str(const std::vector<int>& J) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < J.size(); i++) os << (i ? "," : "") << J[i];
    os << "}";
    return os.str();
}

struct Ctx {
    const RootDatum& d;
    const VerifyConfig& cfg;
    LemmaReport& rep;
    long long budget;

    Ctx(const RootDatum& d_, const VerifyConfig& c, LemmaReport& r)
        : d(d_), cfg(c), rep(r), budget(c.budget) {}
    // one unit of sweep work; returns false when the budget is gone
    bool spend(long long c = 1) {
        budget -= c;
        if (budget < 0) {
            rep.truncated = true;
            return false;
        }
        return true;
    }
    void fail(const std::string& payload) {
        if (rep.failures.size() < 5) rep.failures.push_back(payload);
    }
    void case_done() { rep.cases_run++; }
};

Vec vadd(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); i++) c[i] = a[i] + b[i];
    return c;
}
Vec vsub(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); i++) c[i] = a[i] - b[i];
    return c;
}

// dominant lambdas in the window, lexicographic
std::vector<Vec> lambdas(const RootDatum& d, const VerifyConfig& cfg) {
    std::vector<Vec> out;
    Vec cur(d.rank(), 0);
    while (true) {
        if (d.two_rho_pairing(cur) <= cfg.two_rho_bound) out.push_back(cur);
        int i = d.rank() - 1;
        while (i >= 0 && cur[i] == cfg.bound) cur[i--] = 0;
        if (i < 0) break;
        cur[i]++;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// all mu preceq lam, sorted
std::vector<Vec> orbit_elems(const RootDatum& d, const Vec& lam) {
    std::set<Vec> s;
    for (const Vec& xi : dominant_below(d, lam))
        for (const Weyl& w : d.weyl_elements()) s.insert(d.weyl_act(w, xi));
    return {s.begin(), s.end()};
}

// enumerate coordinate boxes [-B, B]^n lexicographically; f returns false to stop
template <class F>
void box(const RootDatum& d, int B, F&& f) {
    Vec cur(d.rank(), -B);
    while (true) {
        if (!f(cur)) return;
        int i = d.rank() - 1;
        while (i >= 0 && cur[i] == B) cur[i--] = -B;
        if (i < 0) return;
        cur[i]++;
    }
}

bool is_long(const RootDatum& d, int r) {
    long long m = 0;
    for (int s = 0; s < d.num_roots(); s++)
        if (d.root(s).comp == d.root(r).comp) m = std::max(m, d.root(s).len2);
    return d.root(r).len2 == m;
}

std::vector<std::vector<int>> sigma_stable_J(const RootDatum& d) {
    std::vector<std::vector<int>> out;
    int n = d.rank();
    for (int mask = 0; mask < (1 << n); mask++) {
        bool ok = true;
        for (int i = 0; i < n; i++)
            if ((mask >> i & 1) && !(mask >> d.sigma_perm()[i] & 1)) ok = false;
        if (!ok) continue;
        std::vector<int> J;
        for (int i = 0; i < n; i++)
            if (mask >> i & 1) J.push_back(i);
        out.push_back(J);
    }
    return out;
}

bool in_phi_J(const RootDatum& d, int r, const std::vector<int>& J) {
    std::set<int> s(J.begin(), J.end());
    for (int i = 0; i < d.rank(); i++)
        if (d.root(r).rc[i] != 0 && !s.count(i)) return false;
    return true;
}

bool strict_prec(const RootDatum& d, const Vec& a, const Vec& b) {
    return d.preceq(a, b) && !d.preceq(b, a);
}

// candidate b's for admissibility catalogs: Omega elements and dominant translations
std::vector<ExtAff> b_candidates(const RootDatum& d, const Vec& lam) {
    std::set<ExtAff> s;
    FGAbelianGroup G = pi1_G(d);
    if (G.is_finite())
        for (const Vec& e : G.elements()) s.insert(omega_elem(d, d.minuscule_rep(e, d.all_nodes())));
    for (const Vec& xi : dominant_below(d, lam)) s.insert(aff_translation(xi));
    return {s.begin(), s.end()};
}

// r-window allowed for an orbit of size osz when the diagram has h components
bool r_in_range(int r, int osz, int h) {
    if (osz == h) return r >= 1 && r <= h - 1;
    if (osz == 2 * h) return r >= 1 && r <= h;
    return r >= 1 && r <= 2 * h - 1;  // osz == 3h
}

// ---------------------------------------------------------------- checks ---

// weakly dominant and <= lam implies preceq lam; same for dominant + long coroot
void chk_gashi(Ctx& c) {
    for (const Vec& lam : lambdas(c.d, c.cfg)) {
        bool stop = false;
        box(c.d, c.cfg.bound, [&](const Vec& coef) {
            Vec mu = lam;
            for (int i = 0; i < c.d.rank(); i++) {
                if (coef[i] < 0) return true;
                mu = vsub(mu, [&] {
                    Vec v = c.d.coroot_co(c.d.simple_root(i));
                    for (auto& e : v) e *= coef[i];
                    return v;
                }());
            }
            if (!c.spend()) {
                stop = true;
                return false;
            }
            if (!c.d.is_weakly_dominant(mu)) return true;
            c.case_done();
            if (!c.d.preceq(mu, lam))
                c.fail("lam=" + vec_str(lam) + " mu=" + vec_str(mu));
            return true;
        });
        if (stop) return;
        // second clause: dominant mu, long positive gamma
        for (const Vec& mu : dominant_below(c.d, lam))
            for (int r : c.d.positive_roots()) {
                if (!c.spend()) return;
                if (!is_long(c.d, r)) continue;
                Vec m = vadd(mu, c.d.coroot_co(r));
                if (!c.d.leq(m, lam)) continue;
                c.case_done();
                if (!c.d.preceq(m, lam))
                    c.fail("lam=" + vec_str(lam) + " mu=" + vec_str(mu) + " gamma_idx=" +
                           std::to_string(r));
            }
    }
}

// weakly dominant mu stays weakly dominant after -alpha^vee (pairing >= 1)
// or +alpha^vee (pairing = -1), alpha simple
void chk_minus(Ctx& c) {
    box(c.d, c.cfg.bound, [&](const Vec& mu) {
        if (!c.spend()) return false;
        if (!c.d.is_weakly_dominant(mu)) return true;
        for (int i = 0; i < c.d.rank(); i++) {
            int r = c.d.simple_root(i);
            long long p = c.d.pairing(r, mu);
            if (p >= 1) {
                c.case_done();
                if (!c.d.is_weakly_dominant(vsub(mu, c.d.coroot_co(r))))
                    c.fail("mu=" + vec_str(mu) + " alpha=" + std::to_string(i) + " minus");
            }
            if (p == -1) {
                c.case_done();
                if (!c.d.is_weakly_dominant(vadd(mu, c.d.coroot_co(r))))
                    c.fail("mu=" + vec_str(mu) + " alpha=" + std::to_string(i) + " plus");
            }
        }
        return true;
    });
}

// mu != mu' both preceq lam implies Theta nonempty
void chk_con(Ctx& c) {
    for (const Vec& lam : lambdas(c.d, c.cfg)) {
        auto elems = orbit_elems(c.d, lam);
        for (const Vec& mu : elems)
            for (const Vec& mup : elems) {
                if (mu == mup) continue;
                if (!c.spend()) return;
                c.case_done();
                if (theta_sets(c.d, mu, mup, lam).theta.empty())
                    c.fail("lam=" + vec_str(lam) + " mu=" + vec_str(mu) + " mu'=" + vec_str(mup));
            }
    }
}

// contraction output: telescoping sum, extreme subset sums bounded, pairwise >= 0
void chk_contraction(Ctx& c) {
    std::mt19937_64 rng(c.cfg.seed);
    std::uniform_int_distribution<long long> coin(0, c.cfg.bound);
    for (int t = 0; t < c.cfg.random_cases; t++) {
        Vec delta(c.d.rank()), deltap(c.d.rank());
        for (auto& e : delta) e = coin(rng);
        for (auto& e : deltap) e = coin(rng);
        if (!c.spend(10)) return;
        auto gs = contraction(c.d, delta, deltap);
        c.case_done();
        Vec sum(c.d.rank(), 0), pos(c.d.rank(), 0), neg(c.d.rank(), 0);
        bool ok = true;
        for (int g : gs) {
            const Vec& cc = c.d.root(g).cc;
            bool isneg = std::any_of(cc.begin(), cc.end(), [](long long v) { return v < 0; });
            for (int i = 0; i < c.d.rank(); i++) {
                sum[i] += cc[i];
                (isneg ? neg : pos)[i] += cc[i];
            }
            for (int g2 : gs)
                if (c.d.pairing_rr(g, g2) < 0) ok = false;
        }
        // coroot coords of a root are sign-uniform, so the extreme subset
        // sums are the all-positive and all-negative ones
        for (int i = 0; i < c.d.rank(); i++) {
            if (sum[i] != deltap[i] - delta[i]) ok = false;
            if (pos[i] > deltap[i] || -neg[i] > delta[i]) ok = false;
        }
        if (!ok) c.fail("delta=" + vec_str(delta) + " delta'=" + vec_str(deltap));
    }
}

// key-root walk: gamma positive with <gamma, mu+alpha^vee> <= -2; clauses for
// dominant mu
void chk_key(Ctx& c) {
    for (const Vec& lam : lambdas(c.d, c.cfg)) {
        bool stop = false;
        box(c.d, c.cfg.bound, [&](const Vec& mu) {
            for (int al = 0; al < c.d.num_roots(); al++) {
                if (!c.spend()) {
                    stop = true;
                    return false;
                }
                Vec m0 = vadd(mu, c.d.coroot_co(al));
                if (!c.d.leq(m0, lam) || c.d.preceq(m0, lam)) continue;
                c.case_done();
                auto res = key_gamma(c.d, mu, al, lam);
                std::string tag = "lam=" + vec_str(lam) + " mu=" + vec_str(mu) +
                                  " alpha=" + std::to_string(al);
                if (!c.d.root(res.gamma).pos || c.d.pairing(res.gamma, m0) > -2) c.fail(tag);
                if (c.d.is_dominant(mu, c.d.all_nodes())) {
                    bool a = res.gamma == c.d.negate_root(al);
                    bool b = is_long(c.d, res.gamma) &&
                             c.d.leq(vadd(m0, c.d.coroot_co(res.gamma)), lam);
                    if (c.d.pairing(res.gamma, mu) > 1 ||
                        c.d.pairing(res.gamma, c.d.coroot_co(al)) > -2 || (!a && !b))
                        c.fail(tag + " clauses");
                }
            }
            return true;
        });
        if (stop) return;
    }
}

// simply laced: orthogonal D with pairings -1 summing to dominant(mu) - mu
void chk_weak(Ctx& c) {
    if (!c.d.simply_laced()) {
        c.rep.vacuous = true;
        c.rep.note = "requires a simply laced datum";
        return;
    }
    box(c.d, c.cfg.bound, [&](const Vec& mu) {
        if (!c.spend()) return false;
        if (!c.d.is_weakly_dominant(mu)) return true;
        c.case_done();
        auto D = weak_orthogonal_D(c.d, mu);
        Vec sum(c.d.rank(), 0);
        bool ok = true;
        for (int g : D) {
            if (c.d.pairing(g, mu) != -1 || !c.d.root(g).pos) ok = false;
            for (int g2 : D)
                if (g != g2 && c.d.pairing_rr(g, g2) != 0) ok = false;
            sum = vadd(sum, c.d.coroot_co(g));
        }
        if (vadd(mu, sum) != c.d.dominant(mu)) ok = false;
        if (!ok) c.fail("mu=" + vec_str(mu));
        return true;
    });
}

// Theta = Xi_1 forces mu, ups conjugate with an orthogonal difference set
void chk_orth(Ctx& c) {
    if (!c.d.simply_laced()) {
        c.rep.vacuous = true;
        c.rep.note = "requires a simply laced datum";
        return;
    }
    for (const Vec& lam : lambdas(c.d, c.cfg)) {
        auto elems = orbit_elems(c.d, lam);
        for (const Vec& mu : elems)
            for (const Vec& ups : elems) {
                if (!c.spend()) return;
                auto ts = theta_sets(c.d, mu, ups, lam);
                if (ts.theta != ts.xi1) continue;
                c.case_done();
                std::string tag = "lam=" + vec_str(lam) + " mu=" + vec_str(mu) + " ups=" +
                                  vec_str(ups);
                if (c.d.dominant(mu) != c.d.dominant(ups)) {
                    c.fail(tag + " not conjugate");
                    continue;
                }
                // orthogonal subset of Xi_1 summing to mu - ups
                Vec target = vsub(mu, ups);
                std::vector<int> xs = ts.xi1;
                bool found = false;
                std::function<void(size_t, Vec, std::vector<int>)> rec =
                    [&](size_t i, Vec acc, std::vector<int> chosen) {
                        if (found) return;
                        if (acc == target) {
                            found = true;
                            return;
                        }
                        if (i == xs.size()) return;
                        rec(i + 1, acc, chosen);
                        bool orth = std::all_of(chosen.begin(), chosen.end(), [&](int g) {
                            return c.d.pairing_rr(g, xs[i]) == 0;
                        });
                        if (orth) {
                            chosen.push_back(xs[i]);
                            rec(i + 1, vadd(acc, c.d.coroot_co(xs[i])), chosen);
                        }
                    };
                rec(0, Vec(c.d.rank(), 0), {});
                if (!found) c.fail(tag + " no orthogonal subset");
            }
    }
}

// sigma-orbit pairing facts
void chk_graph(Ctx& c) {
    int h = c.d.num_components();
    int comp_rank = c.d.rank() / h;
    bool a_even = c.d.type()[0] == 'A' && comp_rank % 2 == 0;
    for (int a = 0; a < c.d.num_roots(); a++) {
        auto orb = c.d.sigma_orbit_root(a);
        for (int b1 : orb)
            for (int g : orb) {
                if (b1 == g) continue;
                if (!c.spend()) return;
                c.case_done();
                long long p = c.d.pairing_rr(b1, g);
                if (p > 0) c.fail("orbit pairing > 0: roots " + std::to_string(b1) + "," +
                                  std::to_string(g));
                if (p < 0 && !a_even)
                    c.fail("strict orbit pairing outside even-A: roots " + std::to_string(b1) +
                           "," + std::to_string(g));
            }
    }
    // (ii): same component, both sigma^h-pairings -1 => non-orthogonal
    for (int a = 0; a < c.d.num_roots(); a++)
        for (int b1 = 0; b1 < c.d.num_roots(); b1++) {
            if (c.d.root(a).comp != c.d.root(b1).comp) continue;
            if (!c.spend()) return;
            if (c.d.pairing_rr(c.d.sigma_root(a, h), a) != -1 ||
                c.d.pairing_rr(c.d.sigma_root(b1, h), b1) != -1)
                continue;
            c.case_done();
            if (c.d.pairing_rr(a, b1) == 0)
                c.fail("roots " + std::to_string(a) + "," + std::to_string(b1));
        }
}

// single chain step exists: brute-force search for (alpha, r) with the three
// clauses, independent of the chain builder
void chk_conv(Ctx& c) {
    if (!c.d.sigma_transitive_on_components()) {
        c.rep.vacuous = true;
        c.rep.note = "requires sigma transitive on the diagram components";
        return;
    }
    int h = c.d.num_components();
    Mat P = c.d.sigma_matrix();
    Mat oneminus(c.d.rank(), Vec(c.d.rank(), 0));
    for (int i = 0; i < c.d.rank(); i++)
        for (int j = 0; j < c.d.rank(); j++) oneminus[i][j] = (i == j ? 1 : 0) - P[i][j];
    for (const Vec& lam : lambdas(c.d, c.cfg)) {
        auto elems = orbit_elems(c.d, lam);
        for (const Vec& mu : elems)
            for (const Vec& ups : elems) {
                if (mu == ups || !lattice_contains(oneminus, vsub(mu, ups))) continue;
                if (!c.spend(20)) return;
                c.case_done();
                bool found = false;
                for (int al = 0; al < c.d.num_roots() && !found; al++) {
                    int osz = (int)c.d.sigma_orbit_root(al).size();
                    for (int r = 1; r <= 2 * h - 1 && !found; r++) {
                        if (!r_in_range(r, osz, h)) continue;
                        if (c.d.sigma_root(al, r) == al) continue;
                        Vec av = c.d.coroot_co(al);
                        Vec sav = c.d.coroot_co(c.d.sigma_root(al, r));
                        bool front = c.d.preceq(vsub(mu, av), lam) &&
                                     c.d.preceq(vadd(mu, sav), lam) &&
                                     c.d.preceq(vadd(vsub(mu, av), sav), lam);
                        bool back = c.d.preceq(vadd(ups, av), lam) &&
                                    c.d.preceq(vsub(ups, sav), lam) &&
                                    c.d.preceq(vsub(vadd(ups, av), sav), lam);
                        if (!front && !back) continue;
                        Vec nd = vadd(vsub(vsub(mu, ups), av), sav);
                        if (strict_prec(c.d, nd, vsub(mu, ups))) found = true;
                    }
                }
                if (!found)
                    c.fail("lam=" + vec_str(lam) + " mu=" + vec_str(mu) + " ups=" + vec_str(ups));
            }
    }
}

// full chain between cocharacters, re-verified by the independent checker
void chk_conv_chain(Ctx& c) {
    if (!c.d.sigma_transitive_on_components()) {
        c.rep.vacuous = true;
        c.rep.note = "requires sigma transitive on the diagram components";
        return;
    }
    Mat P = c.d.sigma_matrix();
    Mat oneminus(c.d.rank(), Vec(c.d.rank(), 0));
    for (int i = 0; i < c.d.rank(); i++)
        for (int j = 0; j < c.d.rank(); j++) oneminus[i][j] = (i == j ? 1 : 0) - P[i][j];
    for (const Vec& lam : lambdas(c.d, c.cfg)) {
        auto elems = orbit_elems(c.d, lam);
        for (const Vec& mu : elems)
            for (const Vec& ups : elems) {
                if (!lattice_contains(oneminus, vsub(mu, ups))) continue;
                if (!c.spend(20)) return;
                c.case_done();
                std::string tag =
                    "lam=" + vec_str(lam) + " mu=" + vec_str(mu) + " ups=" + vec_str(ups);
                try {
                    auto chain = conv_chain(c.d, mu, ups, lam);
                    if (!check_conv_chain(c.d, mu, ups, lam, chain)) c.fail(tag);
                } catch (const std::exception& e) {
                    c.fail(tag + " threw: " + e.what());
                }
            }
    }
}

// class chains between any two index set elements, with clause re-checks
void chk_convv(Ctx& c) {
    if (!c.d.sigma_transitive_on_components()) {
        c.rep.vacuous = true;
        c.rep.note = "requires sigma transitive on the diagram components";
        return;
    }
    int h = c.d.num_components();
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : sigma_stable_J(c.d))
            for (const ExtAff& b : b_candidates(c.d, lam)) {
                if (!c.spend(50)) return;
                if (!is_admissible(c.d, J, b).ok) continue;
                auto idx = ibar(c.d, lam, J, b);
                for (const Vec& x : idx)
                    for (const Vec& xp : idx) {
                        if (x == xp) continue;
                        if (!c.spend(50)) return;
                        c.case_done();
                        std::string tag = "lam=" + vec_str(lam) + " J=" + j_str(J) + " b=" +
                                          aff_str(b) + " x=" + vec_str(x) + " x'=" + vec_str(xp);
                        try {
                            auto chain = convv_chain(c.d, lam, J, b, x, xp);
                            if (!check_chain_steps(c.d, lam, J, x, xp, chain)) {
                                c.fail(tag + " checker rejected");
                                continue;
                            }
                            for (const auto& st : chain) {
                                Vec fc = c.d.coroot_co(st.alpha);
                                bool antid = true;
                                for (int j : J)
                                    if (fc[j] > 0) antid = false;
                                int osz = (int)c.d.sigma_orbit_root(st.alpha).size();
                                bool rng = (osz == 3 * h) ? (st.r >= 1 && st.r <= 2 * h - 1)
                                                          : (st.r >= 1 && st.r <= h);
                                if (!antid || !c.d.is_minuscule(fc, J) || !rng)
                                    c.fail(tag + " clause violation");
                            }
                        } catch (const std::exception& e) {
                            c.fail(tag + " threw: " + e.what());
                        }
                    }
            }
}

// beta_J: existence, uniqueness, and the preceq transfer clause
void chk_minu(Ctx& c) {
    for (const auto& J : sigma_stable_J(c.d)) {
        for (int r = 0; r < c.d.num_roots(); r++) {
            if (in_phi_J(c.d, r, J)) continue;
            if (!c.spend(5)) return;
            c.case_done();
            std::string tag = "J=" + j_str(J) + " beta=" + std::to_string(r);
            try {
                int bj = beta_J(c.d, r, J);
                // independent uniqueness scan
                Mat AJ = c.d.coroot_lattice(J);
                int count = 0;
                for (int s = 0; s < c.d.num_roots(); s++) {
                    Vec diff = vsub(c.d.coroot_co(s), c.d.coroot_co(r));
                    if (!lattice_contains(AJ, diff)) continue;
                    bool antid = true;
                    for (int j : J)
                        if (c.d.coroot_co(s)[j] > 0) antid = false;
                    if (antid && c.d.is_minuscule(c.d.coroot_co(s), J) && !in_phi_J(c.d, s, J))
                        count++;
                }
                if (count != 1 || in_phi_J(c.d, bj, J)) c.fail(tag + " uniqueness");
            } catch (const std::exception& e) {
                c.fail(tag + " threw: " + e.what());
                continue;
            }
        }
        // clause (b)
        for (const Vec& lam : lambdas(c.d, c.cfg)) {
            bool stop = false;
            box(c.d, c.cfg.bound, [&](const Vec& mu) {
                if (!c.spend()) {
                    stop = true;
                    return false;
                }
                if (!c.d.is_dominant(mu, J) || !c.d.is_minuscule(mu, J)) return true;
                for (int r = 0; r < c.d.num_roots(); r++) {
                    if (in_phi_J(c.d, r, J)) continue;
                    if (!c.d.preceq(vadd(mu, c.d.coroot_co(r)), lam)) continue;
                    c.case_done();
                    int bj = beta_J(c.d, r, J);
                    if (!c.d.preceq(vadd(mu, c.d.coroot_co(bj)), lam))
                        c.fail("J=" + j_str(J) + " lam=" + vec_str(lam) + " mu=" + vec_str(mu) +
                               " beta=" + std::to_string(r));
                }
                return true;
            });
            if (stop) return;
        }
    }
}

ExtAff conj_sigma(const RootDatum& d, const ExtAff& z, const ExtAff& x) {
    return aff_mul(d, aff_mul(d, z, x), aff_inverse(d, aff_sigma(d, z)));
}

// the twisted conjugate of a straight element by its dominant-rep Weyl
// element lands in Omega_J with weakly dominant translation part
void chk_diamond(Ctx& c) {
    auto lams = lambdas(c.d, c.cfg);
    if (lams.empty()) return;
    for (const auto& e : straight_classes_below(c.d, lams.back())) {
        if (!c.spend(20)) return;
        c.case_done();
        auto np = newton(c.d, e.elem);
        auto [nb, z] = c.d.dominant_rep(np.nu, c.d.all_nodes());
        ExtAff dia = conj_sigma(c.d, aff_from_weyl(c.d, z), e.elem);
        std::vector<int> J;
        for (int i = 0; i < c.d.rank(); i++)
            if (c.d.pairing(c.d.simple_root(i), nb) == Rat(0)) J.push_back(i);
        std::string tag = "w=" + aff_str(e.elem);
        bool stable = true;
        for (int j : J)
            if (!std::count(J.begin(), J.end(), c.d.sigma_perm()[j])) stable = false;
        if (!stable) c.fail(tag + " J not sigma-stable");
        if (!in_omega_levi(c.d, J, dia)) c.fail(tag + " not in Omega_J");
        if (!c.d.is_weakly_dominant(dia.mu)) c.fail(tag + " chi not weakly dominant");
        for (int s : dia.w.word)
            if (!std::count(J.begin(), J.end(), s)) c.fail(tag + " finite part outside W_J");
    }
}

// full Levi-selection pipeline succeeds on every straight class in the window
void chk_exist(Ctx& c) {
    auto lams = lambdas(c.d, c.cfg);
    if (lams.empty()) return;
    for (const auto& e : straight_classes_below(c.d, lams.back())) {
        for (const Vec& lam : lams) {
            if (!c.spend(30)) return;
            if (!nonempty(c.d, lam, e.elem)) continue;
            c.case_done();
            std::string tag = "w=" + aff_str(e.elem) + " lam=" + vec_str(lam);
            try {
                auto res = choose_J(c.d, lam, e.elem, c.cfg.seed);
                for (const auto& [k, v] : res.checks)
                    if (!v) c.fail(tag + " check " + k);
            } catch (const std::exception& ex) {
                c.fail(tag + " threw: " + ex.what());
            }
            break;  // one lambda per straight class suffices
        }
    }
}

// whenever the window variety is nonempty, the selected (J, w0) is admissible,
// superbasic, and its index set contains a weakly dominant element
void chk_ideal(Ctx& c) {
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const ExtAff& b : b_candidates(c.d, lam)) {
            if (!c.spend(40)) return;
            if (!nonempty(c.d, lam, b)) continue;
            c.case_done();
            std::string tag = "lam=" + vec_str(lam) + " b=" + aff_str(b);
            try {
                auto res = choose_J(c.d, lam, b, c.cfg.seed);
                if (!is_admissible(c.d, res.J, res.w0).ok) c.fail(tag + " not admissible");
                if (!is_superbasic_levi(c.d, res.J, res.w0)) c.fail(tag + " not superbasic");
                auto idx = ibar(c.d, lam, res.J, res.w0);
                bool wd = std::any_of(idx.begin(), idx.end(),
                                      [&](const Vec& x) { return c.d.is_weakly_dominant(x); });
                if (!wd) c.fail(tag + " no weakly dominant index element");
            } catch (const std::exception& e) {
                c.fail(tag + " threw: " + e.what());
            }
        }
}

// every index-set class has the same Newton point as b
void chk_dominant(Ctx& c) {
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : sigma_stable_J(c.d))
            for (const ExtAff& b : b_candidates(c.d, lam)) {
                if (!c.spend(20)) return;
                if (!is_admissible(c.d, J, b).ok) continue;
                RatVec nu = invariants_of(c.d, b).nu;
                for (const Vec& x : ibar(c.d, lam, J, b)) {
                    c.case_done();
                    auto bx = make_bx(c.d, J, x);
                    if (newton(c.d, bx.b).nu_bar != nu)
                        c.fail("lam=" + vec_str(lam) + " J=" + j_str(J) + " b=" + aff_str(b) +
                               " x=" + vec_str(x));
                }
            }
}

// minimal length elements are reachable by non-increasing twisted conjugation:
// a BFS allowed to climb (slack 2) finds nothing lower than the non-climbing BFS
void chk_min(Ctx& c) {
    auto saff = simple_affine(c.d);
    auto bfs_min = [&](const ExtAff& start, long long cap, int node_cap) {
        std::set<ExtAff> seen{start};
        std::vector<ExtAff> q{start};
        long long best = length(c.d, start);
        for (size_t qi = 0; qi < q.size() && (int)seen.size() < node_cap; qi++) {
            for (size_t si = 0; si < saff.size(); si++) {
                ExtAff nx = aff_mul(c.d, aff_mul(c.d, saff[si].s, q[qi]),
                                    saff[sigma_on_saff(c.d, (int)si)].s);
                long long l = length(c.d, nx);
                if (l > cap || seen.count(nx)) continue;
                seen.insert(nx);
                q.push_back(nx);
                best = std::min(best, l);
            }
        }
        return best;
    };
    box(c.d, std::min(c.cfg.bound, 2), [&](const Vec& mu) {
        for (const Weyl& w : c.d.weyl_elements()) {
            ExtAff x{mu, w};
            long long l = length(c.d, x);
            if (l > c.cfg.two_rho_bound) continue;
            if (!c.spend(200)) return false;
            c.case_done();
            auto red = reduce_to_min(c.d, x);
            long long nonclimb = bfs_min(x, l, 3000);
            long long climb = bfs_min(x, l + 2, 3000);
            if (length(c.d, red.min) != nonclimb || climb < nonclimb)
                c.fail("x=" + aff_str(x) + " reduce=" + std::to_string(length(c.d, red.min)) +
                       " bfs=" + std::to_string(nonclimb) + " slack_bfs=" + std::to_string(climb));
        }
        return true;
    });
}

// fundamental (with respect to the Newton point) iff straight iff the
// length formula holds
void chk_fundamental_ac(Ctx& c) {
    box(c.d, std::min(c.cfg.bound, 2), [&](const Vec& mu) {
        for (const Weyl& w : c.d.weyl_elements()) {
            ExtAff x{mu, w};
            long long l = length(c.d, x);
            if (l > c.cfg.two_rho_bound) continue;
            if (!c.spend(20)) return false;
            c.case_done();
            auto np = newton(c.d, x);
            bool fund = is_fundamental(c.d, x, np.nu);
            bool straight = is_straight(c.d, x);
            bool formula = c.d.two_rho_pairing(np.nu_bar) == Rat(l);
            if (fund != straight || straight != formula)
                c.fail("x=" + aff_str(x) + " fund=" + std::to_string(fund) + " straight=" +
                       std::to_string(straight) + " formula=" + std::to_string(formula));
        }
        return true;
    });
}

void sweep_gen(Ctx& c, bool g2_only) {
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : sigma_stable_J(c.d)) {
            if (g2_only) {
                // short simple roots only
                std::vector<int> shorts;
                for (int i = 0; i < c.d.rank(); i++)
                    if (!is_long(c.d, c.d.simple_root(i))) shorts.push_back(i);
                if (J != shorts || J.empty()) continue;
            }
            for (const ExtAff& b : b_candidates(c.d, lam)) {
                if (!c.spend(40)) return;
                if (!is_admissible(c.d, J, b).ok || !nonempty(c.d, lam, b) ||
                    !hn_irreducible(c.d, lam, b))
                    continue;
                for (const Vec& x : ibar(c.d, lam, J, b)) {
                    c.case_done();
                    std::string tag = "lam=" + vec_str(lam) + " J=" + j_str(J) + " b=" +
                                      aff_str(b) + " x=" + vec_str(x);
                    try {
                        auto g = gen_span_check(c.d, lam, J, b, x);
                        if (!g.ok) c.fail(tag);
                        if (g2_only && !c_set(c.d, lam, J, b, x).g2_modified)
                            c.fail(tag + " modification not applied");
                    } catch (const std::exception& e) {
                        c.fail(tag + " threw: " + e.what());
                    }
                }
            }
        }
}

void chk_gen(Ctx& c) { sweep_gen(c, false); }

void chk_mod(Ctx& c) {
    if (c.d.type() != "G2") {
        c.rep.vacuous = true;
        c.rep.note = "the modified generator set only exists for G2 data";
        return;
    }
    sweep_gen(c, true);
    if (c.rep.cases_run == 0) c.rep.vacuous = true;
}

// existence statement with heavy premises; searched, VACUOUS when the window
// never satisfies them
void chk_lattice(Ctx& c) {
    int h = c.d.num_components();
    bool order_ok = (2 * h) % c.d.sigma_order() == 0;
    if (!c.d.simply_laced() || !order_ok || !c.d.sigma_transitive_on_components()) {
        c.rep.vacuous = true;
        c.rep.note = "requires simply laced, sigma^(2h) = 1, transitive sigma";
        return;
    }
    auto Js = sigma_stable_J(c.d);
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : Js)
            for (const ExtAff& b : b_candidates(c.d, lam)) {
                if (!c.spend(40)) return;
                if (!is_admissible(c.d, J, b).ok || !nonempty(c.d, lam, b) ||
                    !hn_irreducible(c.d, lam, b))
                    continue;
                auto idx = ibar(c.d, lam, J, b);
                for (const auto& J0 : Js) {
                    if (!std::includes(J0.begin(), J0.end(), J.begin(), J.end())) continue;
                    Mat AJ0 = c.d.coroot_lattice(J0);
                    for (const Vec& mu : idx) {
                        if (!c.d.is_weakly_dominant(mu)) continue;
                        for (int th : c.d.positive_roots()) {
                            if (in_phi_J(c.d, th, J0) || c.d.sigma_root(th, h) != th) continue;
                            if (!c.spend(10)) return;
                            // orthogonal D candidates
                            std::vector<int> cand;
                            for (int g : c.d.positive_roots())
                                if (in_phi_J(c.d, g, J0) && c.d.pairing(g, mu) == -1 &&
                                    c.d.pairing_rr(g, th) == -1)
                                    cand.push_back(g);
                            // all orthogonal subsets (sizes are <= 3 here)
                            std::vector<std::vector<int>> Ds{{}};
                            for (size_t ci = 0; ci < cand.size(); ci++) {
                                size_t m = Ds.size();
                                for (size_t k = 0; k < m; k++) {
                                    bool orth = std::all_of(
                                        Ds[k].begin(), Ds[k].end(), [&](int g) {
                                            return c.d.pairing_rr(g, cand[ci]) == 0;
                                        });
                                    if (orth) {
                                        auto nd = Ds[k];
                                        nd.push_back(cand[ci]);
                                        Ds.push_back(nd);
                                    }
                                }
                            }
                            for (const auto& D : Ds) {
                                Vec tot = vadd(mu, c.d.coroot_co(th));
                                for (int g : D) tot = vadd(tot, c.d.coroot_co(g));
                                if (!c.d.preceq(tot, lam)) continue;
                                c.case_done();
                                // conclusion search
                                bool found = false;
                                for (int vt : c.d.positive_roots()) {
                                    if (c.d.sigma_root(vt, h) != vt) continue;
                                    if (!lattice_contains(
                                            AJ0, vsub(c.d.coroot_co(vt), c.d.coroot_co(th))))
                                        continue;
                                    for (const Vec& x : idx) {
                                        auto cs = c_set(c.d, lam, J, b, x);
                                        if (std::count(cs.roots.begin(), cs.roots.end(), vt))
                                            found = true;
                                    }
                                    if (found) break;
                                    for (int al = 0; al < c.d.num_roots() && !found; al++) {
                                        if (!in_phi_J(c.d, al, J0)) continue;
                                        Vec sum = vadd(c.d.root(al).rc, c.d.root(vt).rc);
                                        int av = c.d.root_index(sum);
                                        if (av < 0) continue;
                                        for (const Vec& x : idx) {
                                            Vec xp = c.d.minuscule_rep(
                                                vadd(vsub(x, c.d.coroot_co(
                                                                  c.d.sigma_root(al, h))),
                                                     c.d.coroot_co(al)),
                                                J);
                                            if (step_relation(c.d, lam, J, x, xp, al, h).arrow &&
                                                step_relation(c.d, lam, J, x, xp, av, h).arrow) {
                                                found = true;
                                                break;
                                            }
                                        }
                                    }
                                    if (found) break;
                                }
                                if (!found)
                                    c.fail("lam=" + vec_str(lam) + " J=" + j_str(J) + " J0=" +
                                           j_str(J0) + " b=" + aff_str(b) + " mu=" + vec_str(mu) +
                                           " theta=" + std::to_string(th));
                            }
                        }
                    }
                }
            }
    if (c.rep.cases_run == 0) c.rep.vacuous = true;
}

void chk_k2_consistency(Ctx& c) {
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : sigma_stable_J(c.d))
            for (const ExtAff& b : b_candidates(c.d, lam)) {
                if (!c.spend(40)) return;
                if (!is_admissible(c.d, J, b).ok || !nonempty(c.d, lam, b) ||
                    !hn_irreducible(c.d, lam, b))
                    continue;
                auto idx = ibar(c.d, lam, J, b);
                bool wd = std::any_of(idx.begin(), idx.end(),
                                      [&](const Vec& x) { return c.d.is_weakly_dominant(x); });
                if (!wd) continue;
                c.case_done();
                auto r = kernel_consistency(c.d, lam, J, b);
                if (!r.ok)
                    c.fail("lam=" + vec_str(lam) + " J=" + j_str(J) + " b=" + aff_str(b));
            }
    if (c.rep.cases_run == 0) c.rep.vacuous = true;
}

// ------------------------------------------------ cited-source statements ---

// connected components of Phi_J (as node sets)
std::vector<std::vector<int>> j_components(const RootDatum& d, const std::vector<int>& J) {
    std::vector<std::vector<int>> comps;
    std::set<int> left(J.begin(), J.end());
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (size_t i = 0; i < comp.size(); i++)
            for (auto it = left.begin(); it != left.end();)
                if (d.cartan()[comp[i]][*it] != 0) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else
                    ++it;
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

// enumerate small pi1(M_J) classes via J-dominant J-minuscule representatives
template <class F>
void sweep_mu_x(Ctx& c, const std::vector<int>& J, F&& f) {
    box(c.d, std::min(c.cfg.bound, 2), [&](const Vec& mu) {
        if (!c.spend()) return false;
        if (!c.d.is_dominant(mu, J) || !c.d.is_minuscule(mu, J)) return true;
        return f(mu);
    });
}

void chk_central_prime(Ctx& c) {
    c.rep.note = "re-checks a statement cited from an external source";
    for (const auto& J : sigma_stable_J(c.d)) {
        auto WJ = c.d.weyl_elements(J);
        bool stop = false;
        sweep_mu_x(c, J, [&](const Vec& mu) {
            Weyl wx = make_bx(c.d, J, mu).w;
            for (int bt = 0; bt < c.d.num_roots(); bt++) {
                if (in_phi_J(c.d, bt, J)) continue;
                bool antid = true;
                for (int j : J)
                    if (c.d.coroot_co(bt)[j] > 0) antid = false;
                if (!antid) continue;
                if (!c.spend(10)) {
                    stop = true;
                    return false;
                }
                c.case_done();
                int wxb = c.d.weyl_act_root(wx, bt);
                long long best = c.d.pairing(wxb, mu);
                std::string tag =
                    "J=" + j_str(J) + " mu_x=" + vec_str(mu) + " beta=" + std::to_string(bt);
                bool central_needed = (wxb == bt);
                for (const Weyl& w : WJ) {
                    int wb = c.d.weyl_act_root(w, bt);
                    long long p = c.d.pairing(wb, mu);
                    if (p > best) c.fail(tag + " (a)");
                    if (p == best && wb != wxb) {
                        // w_x(beta) must be <= wb in root order
                        Vec diff = vsub(c.d.root(wb).rc, c.d.root(wxb).rc);
                        if (std::any_of(diff.begin(), diff.end(),
                                        [](long long v) { return v < 0; }))
                            c.fail(tag + " (b)");
                    }
                }
                if (c.d.pairing(bt, mu) == best) central_needed = true;  // (d)
                if (central_needed)
                    for (const auto& comp : j_components(c.d, J)) {
                        bool beta_central = true;
                        for (int j : comp)
                            if (c.d.pairing(c.d.simple_root(j), c.d.coroot_co(bt)) != 0)
                                beta_central = false;
                        if (beta_central) continue;
                        for (int j : comp)
                            if (c.d.pairing(c.d.simple_root(j), mu) != 0) c.fail(tag + " (c)");
                    }
            }
            return true;
        });
        if (stop) return;
    }
}

void chk_minuscule_cited(Ctx& c) {
    c.rep.note = "re-checks a statement cited from an external source";
    for (const auto& J : sigma_stable_J(c.d)) {
        // J-anti-dominant J-minuscule deltas in a small box
        std::vector<Vec> deltas;
        box(c.d, std::min(c.cfg.bound, 2), [&](const Vec& v) {
            bool antid = true;
            for (int j : J)
                if (v[j] > 0) antid = false;
            if (antid && c.d.is_minuscule(v, J)) deltas.push_back(v);
            return deltas.size() < 400;
        });
        bool stop = false;
        sweep_mu_x(c, J, [&](const Vec& mu) {
            Weyl wx = make_bx(c.d, J, mu).w;
            for (const Vec& de : deltas)
                for (const Vec& dp : deltas) {
                    if (!c.spend()) {
                        stop = true;
                        return false;
                    }
                    c.case_done();
                    Vec wdp = c.d.weyl_act(wx, dp);
                    if (!c.d.is_minuscule(vadd(mu, de), J) ||
                        !c.d.is_minuscule(vsub(mu, wdp), J) ||
                        !c.d.is_minuscule(vsub(vadd(mu, de), wdp), J))
                        c.fail("J=" + j_str(J) + " mu_x=" + vec_str(mu) + " d=" + vec_str(de) +
                               " d'=" + vec_str(dp));
                }
            return true;
        });
        if (stop) return;
    }
}

void chk_central(Ctx& c) {
    c.rep.note = "re-checks a statement cited from an external source";
    if (c.d.num_components() < 2) {
        c.rep.vacuous = true;
        c.rep.note += "; needs >= 2 diagram components";
        return;
    }
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : sigma_stable_J(c.d)) {
            auto WJ = c.d.weyl_elements(J);
            bool stop = false;
            sweep_mu_x(c, J, [&](const Vec& mu) {
                for (int bt = 0; bt < c.d.num_roots(); bt++)
                    for (int gm = 0; gm < c.d.num_roots(); gm++) {
                        if (!c.spend(2)) {
                            stop = true;
                            return false;
                        }
                        Vec mb = c.d.minuscule_rep(vadd(mu, c.d.coroot_co(bt)), J);
                        Vec mg = c.d.minuscule_rep(vsub(mu, c.d.coroot_co(gm)), J);
                        if (!c.d.preceq(mb, lam) || !c.d.preceq(mg, lam)) continue;
                        for (int al = 0; al < c.d.num_roots(); al++) {
                            if (in_phi_J(c.d, al, J)) continue;
                            if (c.d.root(al).comp == c.d.root(bt).comp ||
                                c.d.root(al).comp == c.d.root(gm).comp)
                                continue;
                            Vec m1 = c.d.minuscule_rep(
                                vsub(vadd(mu, c.d.coroot_co(bt)), c.d.coroot_co(al)), J);
                            Vec m2 = c.d.minuscule_rep(
                                vsub(vadd(mu, c.d.coroot_co(al)), c.d.coroot_co(gm)), J);
                            if (c.d.preceq(m1, lam) || c.d.preceq(m2, lam)) continue;
                            c.case_done();
                            for (const Weyl& w : WJ)
                                if (c.d.pairing(c.d.weyl_act_root(w, al), mu) != 0)
                                    c.fail("lam=" + vec_str(lam) + " J=" + j_str(J) + " mu_x=" +
                                           vec_str(mu) + " alpha=" + std::to_string(al));
                        }
                    }
                return true;
            });
            if (stop) return;
        }
    if (c.rep.cases_run == 0) c.rep.vacuous = true;
}

void chk_central_pp(Ctx& c) {
    c.rep.note = "re-checks a statement cited from an external source";
    int h = c.d.num_components();
    for (const Vec& lam : lambdas(c.d, c.cfg))
        for (const auto& J : sigma_stable_J(c.d))
            for (const ExtAff& b : b_candidates(c.d, lam)) {
                if (!c.spend(50)) return;
                if (!is_admissible(c.d, J, b).ok) continue;
                auto idx = ibar(c.d, lam, J, b);
                for (const Vec& x : idx) {
                    Weyl wx = make_bx(c.d, J, x).w;
                    for (int al = 0; al < c.d.num_roots(); al++) {
                        if (in_phi_J(c.d, al, J)) continue;
                        for (int r = 2; r <= 2 * h; r++) {
                            if (!c.spend(5)) return;
                            Vec xp = c.d.minuscule_rep(
                                vadd(vsub(x, c.d.coroot_co(c.d.sigma_root(al, r))),
                                     c.d.coroot_co(al)),
                                J);
                            auto sr = step_relation(c.d, lam, J, x, xp, al, r);
                            if (!sr.tail) continue;
                            c.case_done();
                            for (int i = 1; i < r; i++) {
                                if (i % h == 0 || ((i - r) % h + h) % h == 0) continue;
                                int sa = c.d.sigma_root(al, i);
                                if (c.d.weyl_act_root(wx, sa) != sa ||
                                    c.d.pairing(sa, x) != 0)
                                    c.fail("lam=" + vec_str(lam) + " J=" + j_str(J) + " x=" +
                                           vec_str(x) + " alpha=" + std::to_string(al) + " r=" +
                                           std::to_string(r) + " i=" + std::to_string(i));
                            }
                        }
                    }
                }
            }
    if (c.rep.cases_run == 0) c.rep.vacuous = true;
}

}  // namespace

const std::vector<std::string>& lemma_registry() {
    static const std::vector<std::string> ids = {
        "gashi",      "minus",          "con",     "contraction", "key",
        "weak",       "orth",           "graph",   "conv",        "conv_chain",
        "convv",      "minu",           "diamond", "exist",       "ideal",
        "dominant",   "min",            "fundamental_ac",         "gen",
        "mod",        "lattice",        "k2_consistency",         "central_prime",
        "minuscule_cited",              "central", "central_pp"};
    return ids;
}

LemmaReport verify(const std::string& lemma_id, const RootDatum& d, const VerifyConfig& cfg) {
    LemmaReport rep;
    rep.lemma_id = lemma_id;
    {
        std::ostringstream os;
        os << d.type() << " h=" << d.num_components() << " sigma=[";
        for (size_t i = 0; i < d.sigma_perm().size(); i++)
            os << (i ? "," : "") << d.sigma_perm()[i];
        os << "]";
        rep.datum = os.str();
    }
    {
        std::ostringstream os;
        os << "bound=" << cfg.bound << " two_rho_bound=" << cfg.two_rho_bound << " seed="
           << cfg.seed << " random_cases=" << cfg.random_cases << " budget=" << cfg.budget;
        rep.config = os.str();
    }
    Ctx c(d, cfg, rep);
    auto t0 = std::chrono::steady_clock::now();
    if (lemma_id == "gashi") chk_gashi(c);
    else if (lemma_id == "minus") chk_minus(c);
    else if (lemma_id == "con") chk_con(c);
    else if (lemma_id == "contraction") chk_contraction(c);
    else if (lemma_id == "key") chk_key(c);
    else if (lemma_id == "weak") chk_weak(c);
    else if (lemma_id == "orth") chk_orth(c);
    else if (lemma_id == "graph") chk_graph(c);
    else if (lemma_id == "conv") chk_conv(c);
    else if (lemma_id == "conv_chain") chk_conv_chain(c);
    else if (lemma_id == "convv") chk_convv(c);
    else if (lemma_id == "minu") chk_minu(c);
    else if (lemma_id == "diamond") chk_diamond(c);
    else if (lemma_id == "exist") chk_exist(c);
    else if (lemma_id == "ideal") chk_ideal(c);
    else if (lemma_id == "dominant") chk_dominant(c);
    else if (lemma_id == "min") chk_min(c);
    else if (lemma_id == "fundamental_ac") chk_fundamental_ac(c);
    else if (lemma_id == "gen") chk_gen(c);
    else if (lemma_id == "mod") chk_mod(c);
    else if (lemma_id == "lattice") chk_lattice(c);
    else if (lemma_id == "k2_consistency") chk_k2_consistency(c);
    else if (lemma_id == "central_prime") chk_central_prime(c);
    else if (lemma_id == "minuscule_cited") chk_minuscule_cited(c);
    else if (lemma_id == "central") chk_central(c);
    else if (lemma_id == "central_pp") chk_central_pp(c);
    else throw domain_error("verify: unknown lemma id " + lemma_id);
    if (rep.failures.empty() && rep.cases_run == 0 && !rep.vacuous) {
        rep.vacuous = true;
        if (rep.note.empty()) rep.note = "no case in the window satisfied the premises";
    }
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<DatumSpec> profile_data(const std::string& profile) {
    auto cfg = [](int b, long long rb, long long budget) {
        VerifyConfig c;
        c.bound = b;
        c.two_rho_bound = rb;
        c.budget = budget;
        return c;
    };
    std::vector<DatumSpec> out = {
        {"A1 split", "A1", 1, {0}, cfg(3, 8, 400000)},
        {"A1x2 swap", "A1", 2, {1, 0}, cfg(3, 8, 300000)},
        {"A2 split", "A2", 1, {0, 1}, cfg(3, 8, 300000)},
        {"A2 flip", "A2", 1, {1, 0}, cfg(3, 8, 300000)},
        {"B2 split", "B2", 1, {0, 1}, cfg(3, 8, 300000)},
    };
    if (profile == "quick") return out;
    if (profile != "full") throw domain_error("profile must be quick or full");
    out.push_back({"A3 split", "A3", 1, {0, 1, 2}, cfg(2, 8, 150000)});
    out.push_back({"A3 flip", "A3", 1, {2, 1, 0}, cfg(2, 8, 150000)});
    out.push_back({"A4 flip", "A4", 1, {3, 2, 1, 0}, cfg(1, 8, 100000)});
    out.push_back({"D4 split", "D4", 1, {0, 1, 2, 3}, cfg(1, 6, 100000)});
    out.push_back({"D4 triality", "D4", 1, {2, 1, 3, 0}, cfg(1, 6, 100000)});
    out.push_back({"G2 split", "G2", 1, {0, 1}, cfg(2, 10, 200000)});
    return out;
}

std::vector<LemmaReport> verify_all(const std::string& profile) {
    std::vector<LemmaReport> out;
    for (const auto& spec : profile_data(profile)) {
        RootDatum d(spec.type, spec.h, spec.sigma);
        for (const auto& id : lemma_registry()) out.push_back(verify(id, d, spec.cfg));
    }
    return out;
}

}  // namespace adlv
