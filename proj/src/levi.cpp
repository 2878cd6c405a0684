#include "adlv/levi.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace adlv {

static bool sigma_stable(const RootDatum& d, const std::vector<int>& J) {
    std::set<int> s(J.begin(), J.end());
    for (int j : J)
        if (!s.count(d.sigma_perm()[j])) return false;
    return true;
}

static bool word_in(const Weyl& w, const std::vector<int>& J) {
    std::set<int> s(J.begin(), J.end());
    for (int a : w.word)
        if (!s.count(a)) return false;
    return true;
}

LeviDatum make_levi(const RootDatum& d, const std::vector<int>& J) {
    if (!sigma_stable(d, J)) throw domain_error("make_levi: J not sigma-stable");
    LeviDatum L;
    L.J = J;
    std::sort(L.J.begin(), L.J.end());
    // connected components of the sub-diagram on J
    std::vector<int> comp(d.rank(), -1);
    for (int j : L.J) {
        if (comp[j] >= 0) continue;
        int c = (int)L.components.size();
        std::vector<int> stack{j}, nodes;
        comp[j] = c;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            nodes.push_back(a);
            for (int b : L.J)
                if (comp[b] < 0 && d.cartan()[a][b] != 0) {
                    comp[b] = c;
                    stack.push_back(b);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        L.components.push_back(nodes);
    }
    // highest root of each component = unique maximal-height root in its span
    for (const auto& nodes : L.components) {
        int best = -1;
        long long bh = -1;
        for (int r : d.roots_in_span(nodes)) {
            if (!d.root(r).pos) continue;
            long long h = std::accumulate(d.root(r).rc.begin(), d.root(r).rc.end(), 0LL);
            if (h > bh) { bh = h; best = r; }
        }
        L.highest.push_back(best);
    }
    return L;
}

long long length_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& x) {
    if (!word_in(x.w, J)) throw domain_error("length_levi: finite part not in W_J");
    Weyl wi = d.weyl_inverse(x.w);
    long long l = 0;
    for (int r : d.roots_in_span(J)) {
        if (!d.root(r).pos) continue;
        long long p = d.pairing(r, x.mu);
        if (d.root(d.weyl_act_root(wi, r)).pos)
            l += p < 0 ? -p : p;
        else
            l += p - 1 < 0 ? 1 - p : p - 1;
    }
    return l;
}

bool in_omega_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& x) {
    return word_in(x.w, J) && length_levi(d, J, x) == 0;
}

std::vector<LeviSimpleAff> simple_affine_levi(const RootDatum& d, const LeviDatum& L) {
    std::vector<LeviSimpleAff> out;
    for (int j : L.J) {
        int c = -1;
        for (size_t k = 0; k < L.components.size(); k++)
            if (std::count(L.components[k].begin(), L.components[k].end(), j)) c = (int)k;
        out.push_back({aff_from_weyl(d, Weyl{{j}}), c});
    }
    for (size_t c = 0; c < L.components.size(); c++)
        out.push_back({affroot_reflection(d, AffRoot{L.highest[c], 1}), (int)c});
    return out;
}

bool is_superbasic_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& tau) {
    LeviDatum L = make_levi(d, J);
    if (!in_omega_levi(d, J, tau)) throw domain_error("is_superbasic_levi: element not in Omega_J");
    auto saff = simple_affine_levi(d, L);
    int m = (int)saff.size();
    ExtAff ti = aff_inverse(d, tau);
    std::vector<int> img(m, -1);
    for (int i = 0; i < m; i++) {
        ExtAff y = aff_mul(d, aff_mul(d, tau, aff_sigma(d, saff[i].s)), ti);
        for (int j = 0; j < m; j++)
            if (saff[j].s == y) { img[i] = j; break; }
        if (img[i] < 0) throw internal_error("is_superbasic_levi: action does not permute S_J^a");
    }
    std::vector<int> orbit(m, -1);
    int norb = 0;
    for (int i = 0; i < m; i++) {
        if (orbit[i] >= 0) continue;
        int cur = i;
        while (orbit[cur] < 0) { orbit[cur] = norb; cur = img[cur]; }
        norb++;
    }
    for (size_t c = 0; c < L.components.size(); c++) {
        std::set<int> touching;
        for (int i = 0; i < m; i++)
            if (saff[i].comp == (int)c) touching.insert(orbit[i]);
        if (touching.size() > 1) return false;
    }
    return true;
}

FGAbelianGroup pi1_levi(const RootDatum& d, const std::vector<int>& J) {
    if (!sigma_stable(d, J)) throw domain_error("pi1_levi: J not sigma-stable");
    return FGAbelianGroup::quotient(d.rank(), d.coroot_lattice(J));
}

FGAbelianGroup pi1_levi_coinvariants(const RootDatum& d, const std::vector<int>& J) {
    if (!sigma_stable(d, J)) throw domain_error("pi1_levi_coinvariants: J not sigma-stable");
    int n = d.rank();
    Mat A = d.coroot_lattice(J);
    Mat P = d.sigma_matrix();
    int k = J.empty() ? 0 : (int)A[0].size();
    Mat rel(n, Vec(k + n, 0));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < k; j++) rel[i][j] = A[i][j];
        for (int j = 0; j < n; j++) rel[i][k + j] = (i == j ? 1 : 0) - P[i][j];
    }
    return FGAbelianGroup::quotient(n, rel);
}

CanonicalOmegaElem make_bx(const RootDatum& d, const std::vector<int>& J, const Vec& x) {
    if (!sigma_stable(d, J)) throw domain_error("make_bx: J not sigma-stable");
    CanonicalOmegaElem e;
    e.mu = d.minuscule_rep(x, J);
    std::vector<int> stab;
    for (int j : J)
        if (d.pairing(d.simple_root(j), e.mu) == 0) stab.push_back(j);
    Weyl ux = d.longest_element(stab);
    Weyl wJ = d.longest_element(J);
    e.w = d.weyl_mul(ux, wJ);
    e.b = ExtAff{e.mu, e.w};
    if (length_levi(d, J, e.b) != 0) throw internal_error("make_bx: b_x not length 0 in W~_J");
    return e;
}

// M_J-Newton point of an element of W~_J: J-dominant representative of the
// raw Newton cocharacter.
static RatVec newton_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& x) {
    return d.dominant_rep(newton(d, x).nu, J).first;
}

AdmissibleResult is_admissible(const RootDatum& d, const std::vector<int>& J,
                               const ExtAff& b, int widen) {
    if (!sigma_stable(d, J)) throw domain_error("is_admissible: J not sigma-stable");
    ClassInvariants ci = invariants_of(d, b);
    for (int r : d.roots_in_span(J))
        if (d.root(r).pos && d.pairing(r, ci.nu) != Rat(0)) return {};
    // Witness window: nu_{b_x} depends affine-linearly on the free part of x,
    // so a witness, if any, exists with |coords| bounded by the size of nu
    // plus the torsion exponent of pi1(M_J)_sigma. `widen` enlarges the box
    // so the harness can cross-check the bound.
    long long B = 0;
    for (const Rat& c : ci.nu) {
        long long a = (std::abs(c.n) + c.d - 1) / c.d;
        B = std::max(B, a);
    }
    FGAbelianGroup coJ = pi1_levi_coinvariants(d, J);
    long long tors = 1;
    for (long long f : coJ.invariant_factors) tors = std::max(tors, f);
    B += tors + 1 + widen;
    FGAbelianGroup coG = pi1_coinvariants(d);
    Vec kb = coG.canonical_coords(b.mu);
    int n = d.rank();
    std::set<Vec> seen;
    Vec mu(n, -B);
    while (true) {
        Vec rep = d.minuscule_rep(mu, J);
        if (seen.insert(rep).second && coG.canonical_coords(rep) == kb) {
            CanonicalOmegaElem bx = make_bx(d, J, rep);
            if (newton_levi(d, J, bx.b) == ci.nu) return {true, rep};
        }
        int i = 0;
        while (i < n && mu[i] == B) mu[i++] = -B;
        if (i == n) break;
        mu[i]++;
    }
    return {};
}

std::vector<Vec> ibar(const RootDatum& d, const Vec& lam, const std::vector<int>& J,
                      const ExtAff& b) {
    AdmissibleResult adm = is_admissible(d, J, b);
    if (!adm.ok) throw domain_error("ibar: (J, b) not admissible");
    FGAbelianGroup coJ = pi1_levi_coinvariants(d, J);
    Vec key = coJ.canonical_coords(adm.witness);
    std::set<Vec> out;
    for (const Vec& xi : dominant_below(d, lam))
        for (const Weyl& w : d.weyl_elements()) {
            Vec mu = d.weyl_act(w, xi);
            if (!d.is_dominant(mu, J) || !d.is_minuscule(mu, J)) continue;
            if (coJ.canonical_coords(mu) != key) continue;
            out.insert(mu);
        }
    return std::vector<Vec>(out.begin(), out.end());
}

static std::vector<int> zero_nodes(const RootDatum& d, const RatVec& v) {
    std::vector<int> J;
    for (int i = 0; i < d.rank(); i++)
        if (d.pairing(d.simple_root(i), v) == Rat(0)) J.push_back(i);
    return J;
}

static ExtAff conj_by(const RootDatum& d, const Weyl& z, const ExtAff& x) {
    ExtAff az = aff_from_weyl(d, z);
    return aff_mul(d, aff_mul(d, az, x), aff_inverse(d, aff_sigma(d, az)));
}

ChooseJResult choose_J(const RootDatum& d, const Vec& lam, const ExtAff& b,
                       unsigned long long seed) {
    if (!nonempty(d, lam, b)) throw domain_error("choose_J: empty variety");
    ChooseJResult res;
    res.seed = seed;
    ClassInvariants ci = invariants_of(d, b);
    // (1) straight representative of [b] in the lam-cone
    bool found = false;
    for (const auto& e : straight_classes_below(d, lam))
        if (e.kappa_key == ci.kappa_key && e.nu_bar == ci.nu) {
            res.straight = e.elem;
            found = true;
            break;
        }
    if (!found) throw internal_error("choose_J: nonemptiness/straightness mismatch");
    res.nu_bar = ci.nu;
    // (2) conjugate so the Newton point is dominant; land in Omega_{J_nu}
    auto [nb, z] = d.dominant_rep(newton(d, res.straight).nu, d.all_nodes());
    if (nb != ci.nu) throw internal_error("choose_J: Newton point mismatch");
    res.diamond = conj_by(d, z, res.straight);
    std::vector<int> Jnu = zero_nodes(d, nb);
    res.checks["diamond_in_omega"] = in_omega_levi(d, Jnu, res.diamond);
    res.checks["chi_weakly_dominant"] = d.is_weakly_dominant(res.diamond.mu);
    // (3) fixed space V' of v -> w(sigma(v)), w the finite part of diamond
    int n = d.rank();
    Mat M(n, Vec(n, 0));
    for (int j = 0; j < n; j++) {
        Vec ej(n, 0);
        ej[j] = 1;
        Vec im = d.weyl_act(res.diamond.w, d.sigma_co(ej));
        for (int i = 0; i < n; i++) M[i][j] = im[i] - (i == j ? 1 : 0);
    }
    Mat basis = kernel_z(M);
    int dim = basis.empty() ? 0 : (int)basis[0].size();
    // (4) certified generic point v0 = nu_bar + eps*u, u random in V'
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    bool generic = false;
    for (int attempt = 0; attempt < 1000 && !generic; attempt++) {
        Vec u(n, 0);
        for (int k = 0; k < dim; k++) {
            int c = coef(rng);
            for (int i = 0; i < n; i++) u[i] += c * basis[i][k];
        }
        // eps small enough that <alpha,v0> keeps the sign of <alpha,nu_bar>
        // wherever the latter is nonzero
        long long maxu = 0;
        Rat maxr(0);
        for (int r : d.positive_roots()) {
            long long p = d.pairing(r, u);
            maxu = std::max(maxu, std::abs(p));
            Rat q = d.pairing(r, ci.nu);
            if (q > Rat(0) && Rat(1) / q > maxr) maxr = Rat(1) / q;
        }
        long long mr = (maxr.n + maxr.d - 1) / maxr.d;  // ceil
        Rat eps = Rat(1) / (Rat(2) * Rat(1 + maxu) * Rat(1 + mr));
        RatVec v0(n);
        for (int i = 0; i < n; i++) v0[i] = ci.nu[i] + eps * Rat(u[i]);
        generic = true;
        for (int r : d.positive_roots()) {
            Rat q = d.pairing(r, ci.nu);
            Rat p = d.pairing(r, v0);
            if (q != Rat(0) && (q > Rat(0)) != (p > Rat(0))) throw internal_error("choose_J: eps bound violated");
            if (p != Rat(0)) continue;
            // certificate: a root vanishing on v0 must vanish on all of V'
            for (int k = 0; k < dim && generic; k++) {
                long long s = 0;
                for (int i = 0; i < n; i++) s += d.root(r).rc[i] * basis[i][k];
                if (s != 0) generic = false;
            }
            if (!generic) break;
        }
        if (generic) res.v0 = v0;
    }
    res.checks["genericity"] = generic;
    if (!generic) throw internal_error("choose_J: no generic point found");
    auto [v0bar, z0] = d.dominant_rep(res.v0, d.all_nodes());
    res.z0 = z0;
    res.J = zero_nodes(d, v0bar);
    res.w0 = conj_by(d, z0, res.diamond);
    res.chi0 = res.w0.mu;
    // final assertions, each re-verified independently
    res.checks["sigma_J"] = sigma_stable(d, res.J);
    res.checks["w0_in_omega_J"] = res.checks["sigma_J"] && in_omega_levi(d, res.J, res.w0);
    res.checks["superbasic"] = res.checks["w0_in_omega_J"] && is_superbasic_levi(d, res.J, res.w0);
    res.checks["nu_match"] = d.dominant(newton(d, res.w0).nu) == ci.nu;
    res.checks["chi0_weakly_dominant"] = d.is_weakly_dominant(res.chi0);
    bool in_ibar = false;
    if (res.checks["sigma_J"]) {
        Vec rep = d.minuscule_rep(res.chi0, res.J);
        for (const Vec& m : ibar(d, lam, res.J, res.w0))
            if (m == rep) in_ibar = true;
    }
    res.checks["chi0_in_ibar"] = in_ibar;
    for (const auto& [name, ok] : res.checks)
        if (!ok) throw internal_error("choose_J: postcondition failed: " + name);
    return res;
}

KernelToG kernel_to_G(const RootDatum& d, const std::vector<int>& J) {
    if (!sigma_stable(d, J)) throw domain_error("kernel_to_G: J not sigma-stable");
    int n = d.rank();
    Mat A = d.coroot_lattice(d.all_nodes());
    Mat AJ = d.coroot_lattice(J);
    Mat P = d.sigma_matrix();
    int k = J.empty() ? 0 : (int)AJ[0].size();
    // K = A * {u : (P - I) A u in Z Phi_J^vee}: kernel of [(P-I)A | -A_J],
    // projected to the u block and pushed through A
    Mat PmI(n, Vec(n, 0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) PmI[i][j] = P[i][j] - (i == j ? 1 : 0);
    Mat B = mat_mul(PmI, A);
    Mat stacked(n, Vec(n + k, 0));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) stacked[i][j] = B[i][j];
        for (int j = 0; j < k; j++) stacked[i][n + j] = -AJ[i][j];
    }
    Mat ker = kernel_z(stacked);
    int kc = ker.empty() ? 0 : (int)ker[0].size();
    Mat U(n, Vec(kc, 0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < kc; j++) U[i][j] = ker[i][j];
    KernelToG out;
    out.kernel = mat_mul(A, U);
    // sigma-orbit sums of coroots, one per orbit of positive roots
    std::set<int> done;
    std::vector<Vec> ys;
    for (int r : d.positive_roots()) {
        if (done.count(r)) continue;
        Vec y(n, 0);
        for (int s : d.sigma_orbit_root(r)) {
            done.insert(s);
            done.insert(d.negate_root(s));
            for (int i = 0; i < n; i++) y[i] += d.coroot_co(s)[i];
        }
        ys.push_back(y);
    }
    out.y_cols = Mat(n, Vec(ys.size(), 0));
    for (int i = 0; i < n; i++)
        for (size_t j = 0; j < ys.size(); j++) out.y_cols[i][j] = ys[j][i];
    // spanning check: K = Z{y_alpha} + Z Phi_J^vee
    Mat span(n, Vec(ys.size() + k, 0));
    for (int i = 0; i < n; i++) {
        for (size_t j = 0; j < ys.size(); j++) span[i][j] = ys[j][i];
        for (int j = 0; j < k; j++) span[i][ys.size() + j] = AJ[i][j];
    }
    out.span_ok = lattice_equal(out.kernel, span);
    return out;
}

}  // namespace adlv
