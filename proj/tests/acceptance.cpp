// Acceptance gate: one pass/fail line per criterion, exit nonzero iff any
// criterion fails. Sweeps are windowed but exhaustive within their windows;
// every check either recomputes the claimed property directly or runs an
// independent checker on the emitted certificate.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "adlv/json_io.hpp"

using namespace adlv;

namespace {

std::vector<int> id_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    return p;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); i++) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// dominant lambdas with <2rho, lam> <= cap; coordinate i is capped by the
// pairing of 2rho with the i-th fundamental coweight
std::vector<Vec> window_lambdas(const RootDatum& d, long long cap) {
    Vec cmax(d.rank());
    for (int i = 0; i < d.rank(); i++) {
        Vec e(d.rank(), 0);
        e[i] = 1;
        cmax[i] = cap / std::max(1LL, d.two_rho_pairing(e));
    }
    std::vector<Vec> out;
    Vec cur(d.rank(), 0);
    while (true) {
        if (d.two_rho_pairing(cur) <= cap) out.push_back(cur);
        int i = d.rank() - 1;
        while (i >= 0 && cur[i] == cmax[i]) cur[i--] = 0;
        if (i < 0) break;
        cur[i]++;
    }
    return out;
}

// all mu preceq lam (full Weyl orbit of everything dominant below lam)
std::vector<Vec> orbit_elems(const RootDatum& d, const Vec& lam) {
    std::set<Vec> s;
    for (const Vec& xi : dominant_below(d, lam))
        for (const Weyl& w : d.weyl_elements()) s.insert(d.weyl_act(w, xi));
    return {s.begin(), s.end()};
}

struct Sweep {
    long long cases = 0;
    long long failures = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        if (failures == 0) first_failure = what;
        failures++;
    }
    bool ok() const { return failures == 0 && cases > 0; }
};

// straight class representatives below lam, one per (kappa, nu) class
std::vector<ExtAff> class_reps(const RootDatum& d, const Vec& lam) {
    std::set<std::string> seen;
    std::vector<ExtAff> out;
    for (const auto& e : straight_classes_below(d, lam)) {
        std::string key = vec_str(e.kappa_key) + "|";
        for (const Rat& r : e.nu_bar) key += r.str() + ",";
        if (seen.insert(key).second) out.push_back(e.elem);
    }
    return out;
}

// ---- criterion bodies ------------------------------------------------------

// weakly dominant mu <= lam implies mu preceq lam
Sweep crit_order_sweep() {
    Sweep s;
    for (const char* type : {"A1", "A2", "B2", "G2", "A3", "D4"}) {
        RootDatum d(type, 1, id_perm(type[1] - '0'));
        long long npos = (long long)d.positive_roots().size();
        for (const Vec& lam : window_lambdas(d, 12)) {
            // mu = lam - sum c_i alpha_i^vee, c >= 0; weak dominance forces
            // <2rho, lam - mu> = 2 * sum c_i <= <2rho, lam> + |Phi+|
            long long cap = (d.two_rho_pairing(lam) + npos) / 2;
            std::function<void(int, long long, const Vec&)> rec =
                [&](int i, long long left, const Vec& mu) {
                    if (i == d.rank()) {
                        if (!d.is_weakly_dominant(mu)) return;
                        s.cases++;
                        if (!d.preceq(mu, lam))
                            s.fail(std::string(type) + " lam=" + vec_str(lam) +
                                   " mu=" + vec_str(mu));
                        return;
                    }
                    Vec cur = mu;
                    Vec av = d.coroot_co(d.simple_root(i));
                    for (long long c = 0; c <= left; c++) {
                        rec(i + 1, left - c, cur);
                        for (int j = 0; j < d.rank(); j++) cur[j] -= av[j];
                    }
                };
            rec(0, cap, lam);
        }
    }
    return s;
}

struct TwistedDatum {
    const char* type;
    int h;
    std::vector<int> sigma;
};

const std::vector<TwistedDatum>& small_affine_data() {
    static std::vector<TwistedDatum> data = {
        {"A1", 1, {0}}, {"A2", 1, {0, 1}}, {"A2", 1, {1, 0}}, {"B2", 1, {0, 1}}};
    return data;
}

// every element of length <= lcap, via a coordinate box that provably covers it
template <class F>
void for_short_elements(const RootDatum& d, long long lcap, F&& f) {
    int B = (int)lcap + 4;
    Vec mu(d.rank(), -B);
    while (true) {
        for (const Weyl& w : d.weyl_elements()) {
            ExtAff x{mu, w};
            if (length(d, x) <= lcap) f(x);
        }
        int i = d.rank() - 1;
        while (i >= 0 && mu[i] == B) mu[i--] = -B;
        if (i < 0) break;
        mu[i]++;
    }
}

// fundamental (w.r.t. the Newton point) iff straight
Sweep crit_fundamental() {
    Sweep s;
    for (const auto& spec : small_affine_data()) {
        RootDatum d(spec.type, spec.h, spec.sigma);
        for_short_elements(d, 8, [&](const ExtAff& x) {
            s.cases++;
            auto np = newton(d, x);
            if (is_fundamental(d, x, np.nu) != is_straight(d, x))
                s.fail(std::string(spec.type) + " x=" + aff_str(x));
        });
    }
    return s;
}

// reduce_to_min matches the minimum over the step-closure of the sigma-class
Sweep crit_min() {
    Sweep s;
    for (const auto& spec : small_affine_data()) {
        RootDatum d(spec.type, spec.h, spec.sigma);
        auto saff = simple_affine(d);
        for_short_elements(d, 8, [&](const ExtAff& x) {
            s.cases++;
            long long cap = length(d, x) + 2;  // slack: allow mild climbing
            std::set<ExtAff> seen{x};
            std::vector<ExtAff> q{x};
            long long best = length(d, x);
            for (size_t qi = 0; qi < q.size(); qi++)
                for (size_t si = 0; si < saff.size(); si++) {
                    ExtAff nx = aff_mul(d, aff_mul(d, saff[si].s, q[qi]),
                                        saff[sigma_on_saff(d, (int)si)].s);
                    if (length(d, nx) > cap || !seen.insert(nx).second) continue;
                    q.push_back(nx);
                    best = std::min(best, length(d, nx));
                }
            auto red = reduce_to_min(d, x);
            if (length(d, red.min) != best)
                s.fail(std::string(spec.type) + " x=" + aff_str(x) + " reduce=" +
                       std::to_string(length(d, red.min)) + " closure=" + std::to_string(best));
        });
    }
    return s;
}

// mu != mu' both preceq lam implies Theta(mu, mu', lam) nonempty
Sweep crit_theta_nonempty() {
    Sweep s;
    std::vector<TwistedDatum> data = {
        {"A3", 1, {0, 1, 2}}, {"D4", 1, {0, 1, 2, 3}}, {"D4", 1, {2, 1, 3, 0}}};
    for (const auto& spec : data) {
        RootDatum d(spec.type, spec.h, spec.sigma);
        for (const Vec& lam : window_lambdas(d, 10)) {
            bool in_box = true;
            for (long long v : lam) in_box &= v <= 3;
            if (!in_box) continue;
            auto elems = orbit_elems(d, lam);
            for (const Vec& mu : elems)
                for (const Vec& mup : elems) {
                    if (mu == mup) continue;
                    s.cases++;
                    if (theta_sets(d, mu, mup, lam).theta.empty())
                        s.fail(std::string(spec.type) + " lam=" + vec_str(lam) + " mu=" +
                               vec_str(mu) + " mu'=" + vec_str(mup));
                }
        }
    }
    return s;
}

// conv_chain succeeds on every window pair with mu - ups in (1-sigma)Y and
// the independent checker validates the chain
Sweep crit_conv_chain() {
    Sweep s;
    std::vector<std::pair<TwistedDatum, long long>> data = {
        {{"A1", 2, {1, 0}}, 8}, {{"A2", 1, {1, 0}}, 8},
        {{"A3", 1, {2, 1, 0}}, 6}, {{"D4", 1, {2, 1, 3, 0}}, 6}};
    for (const auto& [spec, cap] : data) {
        RootDatum d(spec.type, spec.h, spec.sigma);
        Mat one_minus_sigma = mat_identity(d.rank());
        Mat sm = d.sigma_matrix();
        for (int i = 0; i < d.rank(); i++)
            for (int j = 0; j < d.rank(); j++) one_minus_sigma[i][j] -= sm[i][j];
        for (const Vec& lam : window_lambdas(d, cap)) {
            auto elems = orbit_elems(d, lam);
            for (const Vec& mu : elems)
                for (const Vec& ups : elems) {
                    Vec diff(d.rank());
                    for (int i = 0; i < d.rank(); i++) diff[i] = mu[i] - ups[i];
                    if (!lattice_contains(one_minus_sigma, diff)) continue;
                    s.cases++;
                    std::string tag = std::string(spec.type) + " lam=" + vec_str(lam) +
                                      " mu=" + vec_str(mu) + " ups=" + vec_str(ups);
                    try {
                        auto steps = conv_chain(d, mu, ups, lam);
                        if (!check_conv_chain(d, mu, ups, lam, steps)) s.fail(tag);
                    } catch (const std::exception& e) {
                        s.fail(tag + " threw: " + e.what());
                    }
                }
        }
    }
    return s;
}

// harness sweeps reused as-is: their checkers are already independent oracles
Sweep crit_harness(const std::vector<TwistedDatum>& data, const std::vector<std::string>& ids,
                   std::function<VerifyConfig(const RootDatum&)> cfg_of) {
    Sweep s;
    for (const auto& spec : data) {
        RootDatum d(spec.type, spec.h, spec.sigma);
        for (const std::string& id : ids) {
            auto r = verify(id, d, cfg_of(d));
            s.cases += r.cases_run;
            if (r.status() == "FAIL")
                s.fail(std::string(spec.type) + " " + id + ": " + r.failures.front());
            else if (r.status() != "PASS" || r.truncated)
                s.fail(std::string(spec.type) + " " + id + ": not an untruncated PASS");
        }
    }
    return s;
}

struct Catalog {
    TwistedDatum spec;
    long long cap;
};

const std::vector<Catalog>& catalogs() {
    static std::vector<Catalog> data = {
        {{"A1", 1, {0}}, 8}, {{"A2", 1, {0, 1}}, 8}, {{"D4", 1, {0, 1, 2, 3}}, 6}};
    return data;
}

template <class F>
void for_catalog_configs(F&& f) {
    for (const auto& cat : catalogs()) {
        RootDatum d(cat.spec.type, cat.spec.h, cat.spec.sigma);
        for (const Vec& lam : window_lambdas(d, cat.cap))
            for (const ExtAff& b : class_reps(d, lam))
                if (nonempty(d, lam, b)) f(d, cat.spec.type, lam, b);
    }
}

// choose_J certificate re-verified from scratch
Sweep crit_levi_pipeline() {
    Sweep s;
    for_catalog_configs([&](const RootDatum& d, const char* type, const Vec& lam,
                            const ExtAff& b) {
        s.cases++;
        std::string tag = std::string(type) + " lam=" + vec_str(lam) + " b=" + aff_str(b);
        try {
            auto r = choose_J(d, lam, b);
            for (const auto& [name, ok] : r.checks)
                if (!ok) s.fail(tag + " check " + name);
            bool sigma_J = true;
            for (int j : r.J)
                sigma_J &= std::count(r.J.begin(), r.J.end(), d.sigma_perm()[j]) == 1;
            bool admissible = is_admissible(d, r.J, r.w0).ok;
            bool superbasic = is_superbasic_levi(d, r.J, r.w0);
            bool nu_match = d.dominant(newton(d, r.w0).nu) == invariants_of(d, b).nu;
            auto ib = ibar(d, lam, r.J, r.w0);
            bool chi0_ok = d.is_weakly_dominant(r.chi0) &&
                           std::count(ib.begin(), ib.end(), r.chi0) == 1;
            if (!sigma_J || !admissible || !superbasic || !nu_match || !chi0_ok)
                s.fail(tag + " re-verification");
        } catch (const std::exception& e) {
            s.fail(tag + " threw: " + e.what());
        }
    });
    return s;
}

// generator span and kernel lattice equality on HN-irreducible configs
Sweep crit_gen_kernel() {
    Sweep s;
    for_catalog_configs([&](const RootDatum& d, const char* type, const Vec& lam,
                            const ExtAff& b) {
        if (!hn_irreducible(d, lam, b)) return;
        std::string tag = std::string(type) + " lam=" + vec_str(lam) + " b=" + aff_str(b);
        try {
            auto r = choose_J(d, lam, b);
            if (!is_admissible(d, r.J, r.w0).ok) {
                s.fail(tag + " not admissible");
                return;
            }
            for (const Vec& x : ibar(d, lam, r.J, r.w0)) {
                s.cases++;
                if (!gen_span_check(d, lam, r.J, r.w0, x).ok)
                    s.fail(tag + " x=" + vec_str(x) + " span");
            }
            if (!kernel_consistency(d, lam, r.J, r.w0).ok) s.fail(tag + " kernel lattice");
        } catch (const std::exception& e) {
            s.fail(tag + " threw: " + e.what());
        }
    });
    return s;
}

// |fiber| = |pi1(G)^sigma| whenever nonempty, plus the three worked cases
Sweep crit_pi0() {
    Sweep s;
    for_catalog_configs([&](const RootDatum& d, const char* type, const Vec& lam,
                            const ExtAff& b) {
        s.cases++;
        auto r = pi0(d, lam, b);
        if (r.size != r.sigma_fixed_order)
            s.fail(std::string(type) + " lam=" + vec_str(lam) + " b=" + aff_str(b) +
                   " size=" + std::to_string(r.size));
    });
    RootDatum pgl2("A1", 1, {0});
    RootDatum pgl3f("A2", 1, {1, 0});
    struct Worked {
        const RootDatum& d;
        Vec lam;
        ExtAff b;
        long long size;
    } worked[] = {
        {pgl2, {2}, aff_identity(pgl2), 2},
        {pgl2, {1}, ExtAff{{1}, pgl2.canonical_weyl({0})}, 2},  // superbasic omega
        {pgl3f, {1, 1}, aff_identity(pgl3f), 1},
    };
    for (const auto& w : worked) {
        s.cases++;
        auto r = pi0(w.d, w.lam, w.b);
        if (r.size != w.size)
            s.fail("worked case lam=" + vec_str(w.lam) + " b=" + aff_str(w.b) + " got " +
                   std::to_string(r.size) + " want " + std::to_string(w.size));
    }
    return s;
}

// verify_all(quick) twice: byte-identical serialized reports
Sweep crit_determinism() {
    Sweep s;
    auto dump = [] {
        std::string out;
        for (const auto& r : verify_all("quick")) out += report_to_json(r).dump() + "\n";
        return out;
    };
    std::string a = dump(), b = dump();
    s.cases = 1;
    if (a != b) s.fail("quick-profile reports differ between runs");
    if (a.find("\"FAIL\"") != std::string::npos) s.fail("quick profile has a FAIL report");
    return s;
}

int g_failed = 0;

void criterion(int idx, const std::string& desc, double limit_s, std::function<Sweep()> body) {
    auto t0 = std::chrono::steady_clock::now();
    Sweep s;
    std::string threw;
    try {
        s = body();
    } catch (const std::exception& e) {
        threw = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = threw.empty() && s.ok() && dt < limit_s;
    if (!ok) g_failed++;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << idx << "  " << desc << "  [" << s.cases
         << " cases, " << s.failures << " failures, " << dt << "s]";
    if (!threw.empty()) line << "  threw: " << threw;
    if (!s.first_failure.empty()) line << "  first: " << s.first_failure;
    if (dt >= limit_s) line << "  over time limit " << limit_s << "s";
    if (threw.empty() && s.cases == 0) line << "  (no cases run)";
    std::cout << line.str() << "\n" << std::flush;
}

}  // namespace

int main() {
    criterion(1, "order sweep: weakly dominant mu <= lam implies mu preceq lam", 60,
              crit_order_sweep);
    criterion(2, "fundamental iff straight, length <= 8", 120, crit_fundamental);
    criterion(3, "reduce_to_min matches sigma-class step-closure minimum", 600, crit_min);
    criterion(4, "Theta nonempty for distinct pairs below lam", 600, crit_theta_nonempty);
    criterion(5, "twisted chains built and independently re-checked", 600, crit_conv_chain);
    criterion(6, "contraction clauses on 1000 seeded random pairs per type", 600, [] {
        std::vector<TwistedDatum> data = {
            {"A2", 1, {0, 1}}, {"A3", 1, {0, 1, 2}}, {"B2", 1, {0, 1}}, {"D4", 1, {0, 1, 2, 3}}};
        return crit_harness(data, {"contraction"}, [](const RootDatum&) {
            VerifyConfig cfg;
            cfg.random_cases = 1000;
            cfg.seed = 7;
            return cfg;
        });
    });
    criterion(7, "weakly dominant orthogonal sets and coincidence clauses", 600, [] {
        std::vector<TwistedDatum> data = {
            {"A2", 1, {0, 1}}, {"A3", 1, {0, 1, 2}}, {"D4", 1, {0, 1, 2, 3}}};
        return crit_harness(data, {"weak", "orth"}, [](const RootDatum& d) {
            VerifyConfig cfg;
            if (d.rank() >= 4) cfg.bound = 2;
            return cfg;
        });
    });
    criterion(8, "Levi selection certificate re-verified over the catalogs", 600,
              crit_levi_pipeline);
    criterion(9, "generator span and kernel lattice equality when HN-irreducible", 600,
              crit_gen_kernel);
    criterion(10, "component count equals |pi1(G)^sigma| when nonempty", 600, crit_pi0);
    criterion(11, "quick verification profile is deterministic and green", 300,
              crit_determinism);
    return g_failed == 0 ? 0 : 1;
}
