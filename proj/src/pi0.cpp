#include "adlv/pi0.hpp"

#include <algorithm>
#include <set>

namespace adlv {

// (sigma - 1) applied to an ambient representative of a pi1(G) class
static Vec sigma_minus_one(const RootDatum& d, const Vec& x) {
    Vec s = d.sigma_co(x);
    for (int i = 0; i < d.rank(); i++) s[i] -= x[i];
    return s;
}

Pi0Result pi0(const RootDatum& d, const Vec& lam, const ExtAff& b, unsigned long long seed) {
    if (!d.is_dominant(lam, d.all_nodes())) throw domain_error("pi0: lam not dominant");
    if (!nonempty(d, lam, b)) throw domain_error("pi0: empty variety (kappa or Newton criterion)");
    FGAbelianGroup G = pi1_G(d);
    if (!G.is_finite()) throw domain_error("pi0: pi1(G) not finite");

    Pi0Result out;
    out.hn_irred = hn_irreducible(d, lam, b);
    out.formula_asserted = out.hn_irred;

    Vec c(d.rank());
    for (int i = 0; i < d.rank(); i++) c[i] = lam[i] - b.mu[i];
    std::set<Vec> fiber;
    for (const Vec& x : G.elements()) {
        Vec lhs = sigma_minus_one(d, x);
        if (G.is_zero(lhs)) out.sigma_fixed_order++;
        Vec diff(d.rank());
        for (int i = 0; i < d.rank(); i++) diff[i] = lhs[i] - c[i];
        if (G.is_zero(diff)) fiber.insert(d.minuscule_rep(x, d.all_nodes()));
    }
    out.fiber.assign(fiber.begin(), fiber.end());
    out.size = (long long)out.fiber.size();
    // a nonempty fiber is a coset of the fixed-point kernel
    if (out.size != 0 && out.size != out.sigma_fixed_order)
        throw internal_error("pi0: fiber size differs from |pi1(G)^sigma|");

    out.levi_certificate = choose_J(d, lam, b, seed);
    out.kernel_certificate = kernel_to_G(d, out.levi_certificate.J);
    if (out.hn_irred)
        out.span_certificate = gen_span_check(d, lam, out.levi_certificate.J,
                                              out.levi_certificate.w0,
                                              out.levi_certificate.chi0);
    return out;
}

KernelConsistencyReport kernel_consistency(const RootDatum& d, const Vec& lam,
                                           const std::vector<int>& J, const ExtAff& b) {
    if (!hn_irreducible(d, lam, b)) throw domain_error("kernel_consistency: not HN-irreducible");
    auto adm = is_admissible(d, J, b);
    if (!adm.ok) throw domain_error("kernel_consistency: (J, b) not admissible");

    KernelConsistencyReport rep;
    rep.kernel = kernel_to_G(d, J).kernel;

    // generators: Phi_J coroots, plus for every alpha whose J-anti-dominant
    // J-minuscule representative lands in some C-set, the sigma-orbit coroot
    // sum y_alpha (constant on Z Phi_J^vee-translates of the orbit)
    std::set<int> c_reps;
    for (const Vec& x : ibar(d, lam, J, b))
        for (int r : c_set(d, lam, J, b, x).roots) c_reps.insert(r);
    std::set<int> in_J(J.begin(), J.end());
    std::vector<Vec> cols;
    for (int j : J) cols.push_back(d.coroot_co(d.simple_root(j)));
    std::set<int> done;
    for (int r : d.positive_roots()) {
        if (done.count(r)) continue;
        bool in_phi_J = true;
        for (int i = 0; i < d.rank(); i++)
            if (d.root(r).rc[i] != 0 && !in_J.count(i)) in_phi_J = false;
        if (in_phi_J) continue;
        if (!c_reps.count(beta_J(d, r, J))) continue;
        Vec y(d.rank(), 0);
        for (int s : d.sigma_orbit_root(r)) {
            done.insert(s);
            for (int i = 0; i < d.rank(); i++) y[i] += d.coroot_co(s)[i];
        }
        cols.push_back(y);
    }
    auto to_mat = [&](const std::vector<Vec>& cs) {
        Mat m(d.rank(), Vec(cs.size(), 0));
        for (int i = 0; i < d.rank(); i++)
            for (size_t j = 0; j < cs.size(); j++) m[i][j] = cs[j][i];
        return m;
    };
    rep.generated = to_mat(cols);
    rep.ok = lattice_equal(rep.generated, rep.kernel);

    // When the C-set span falls short, add the double-arrow generators: for a
    // sigma^h-fixed positive theta, if some x admits arrows with r = h along
    // both beta and beta + theta toward the same class, the eta-difference of
    // the two endpoints is exactly y_theta, certifying it as a kernel
    // generator (simply-laced only; root addition on coroots is used).
    if (!rep.ok && d.simply_laced()) {
        int h = d.num_components();
        auto idx = ibar(d, lam, J, b);
        auto in_ibar = [&](const Vec& v) {
            return std::find(idx.begin(), idx.end(), v) != idx.end();
        };
        for (int th : d.positive_roots()) {
            if (d.sigma_root(th, h) != th) continue;
            bool hit = false;
            for (int bt = 0; bt < d.num_roots() && !hit; bt++) {
                Vec sum(d.rank());
                for (int i = 0; i < d.rank(); i++)
                    sum[i] = d.root(bt).rc[i] + d.root(th).rc[i];
                int bt2 = d.root_index(sum);
                if (bt2 < 0) continue;
                for (const Vec& x : idx) {
                    Vec xp(d.rank());
                    for (int i = 0; i < d.rank(); i++)
                        xp[i] = x[i] + d.coroot_co(bt)[i] -
                                d.coroot_co(d.sigma_root(bt, h))[i];
                    xp = d.minuscule_rep(xp, J);
                    if (!in_ibar(xp)) continue;
                    if (step_relation(d, lam, J, x, xp, bt, h).arrow &&
                        step_relation(d, lam, J, x, xp, bt2, h).arrow) {
                        hit = true;
                        break;
                    }
                }
            }
            if (hit) {
                Vec y(d.rank(), 0);
                for (int s : d.sigma_orbit_root(th))
                    for (int i = 0; i < d.rank(); i++) y[i] += d.coroot_co(s)[i];
                cols.push_back(y);
            }
        }
        rep.generated = to_mat(cols);
        rep.ok = lattice_equal(rep.generated, rep.kernel);
    }
    return rep;
}

}  // namespace adlv
