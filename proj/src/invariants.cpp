#include "adlv/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace adlv {

FGAbelianGroup pi1_G(const RootDatum& d) {
    return FGAbelianGroup::quotient(d.rank(), d.coroot_lattice(d.all_nodes()));
}

FGAbelianGroup pi1_coinvariants(const RootDatum& d) {
    int n = d.rank();
    Mat A = d.coroot_lattice(d.all_nodes());
    Mat P = d.sigma_matrix();
    Mat rel(n, Vec(2 * n, 0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            rel[i][j] = A[i][j];
            rel[i][n + j] = (i == j ? 1 : 0) - P[i][j];
        }
    return FGAbelianGroup::quotient(n, rel);
}

ClassInvariants invariants_of(const RootDatum& d, const ExtAff& b) {
    ClassInvariants ci;
    ci.kappa_rep = b.mu;
    ci.kappa_key = pi1_coinvariants(d).canonical_coords(b.mu);
    ci.nu = newton(d, b).nu_bar;
    if (d.sigma_co(ci.nu) != ci.nu)
        throw internal_error("invariants_of: dominant Newton point not sigma-fixed");
    return ci;
}

bool is_basic(const RootDatum& d, const ExtAff& b) {
    RatVec nu = newton(d, b).nu_bar;
    for (int r : d.positive_roots())
        if (d.pairing(r, nu) != Rat(0)) return false;
    return true;
}

bool is_superbasic_omega(const RootDatum& d, const ExtAff& tau) {
    if (length(d, tau) != 0) throw domain_error("is_superbasic_omega: element not in Omega");
    auto saff = simple_affine(d);
    int m = (int)saff.size();
    // component of each S^a node in the affine Dynkin diagram
    auto comp = [&](int i) { return i < d.rank() ? d.component_of_node(i) : i - d.rank(); };
    // the action s -> tau sigma(s) tau^-1
    ExtAff ti = aff_inverse(d, tau);
    std::vector<int> img(m, -1);
    for (int i = 0; i < m; i++) {
        ExtAff y = aff_mul(d, aff_mul(d, tau, aff_sigma(d, saff[i].s)), ti);
        for (int j = 0; j < m; j++)
            if (saff[j].s == y) { img[i] = j; break; }
        if (img[i] < 0) throw internal_error("is_superbasic_omega: image not a simple affine reflection");
    }
    // orbits must be unions of whole components
    std::vector<int> orbit(m, -1);
    int norb = 0;
    for (int i = 0; i < m; i++) {
        if (orbit[i] >= 0) continue;
        int cur = i;
        while (orbit[cur] < 0) { orbit[cur] = norb; cur = img[cur]; }
        norb++;
    }
    for (int c = 0; c < d.num_components(); c++) {
        std::set<int> touching;
        for (int i = 0; i < m; i++)
            if (comp(i) == c) touching.insert(orbit[i]);
        if (touching.size() != 1) return false;  // component split across orbits
    }
    return true;
}

std::optional<RatVec> coroot_coefficients(const RootDatum& d, const RatVec& target) {
    long long L = 1;
    for (const Rat& r : target) L = std::lcm(L, r.d);
    Vec t(d.rank());
    for (int i = 0; i < d.rank(); i++) t[i] = target[i].n * (L / target[i].d);
    auto sol = solve_q(d.coroot_lattice(d.all_nodes()), t);
    if (!sol) return std::nullopt;
    for (auto& c : *sol) c = c / Rat(L);
    return sol;
}

bool nonempty(const RootDatum& d, const Vec& lam, const ExtAff& b) {
    if (!d.is_dominant(lam, d.all_nodes())) throw domain_error("nonempty: lam not dominant");
    FGAbelianGroup coinv = pi1_coinvariants(d);
    if (coinv.canonical_coords(lam) != coinv.canonical_coords(b.mu)) return false;
    ClassInvariants ci = invariants_of(d, b);
    RatVec dia = d.diamond(lam);
    RatVec diff(d.rank());
    for (int i = 0; i < d.rank(); i++) diff[i] = dia[i] - ci.nu[i];
    auto coef = coroot_coefficients(d, diff);
    if (!coef) throw internal_error("nonempty: kappa matches but difference outside Q Phi^vee");
    for (const Rat& c : *coef)
        if (c < Rat(0)) return false;
    return true;
}

bool hn_irreducible(const RootDatum& d, const Vec& lam, const ExtAff& b) {
    if (!nonempty(d, lam, b)) throw domain_error("hn_irreducible: empty variety");
    ClassInvariants ci = invariants_of(d, b);
    RatVec dia = d.diamond(lam);
    RatVec diff(d.rank());
    for (int i = 0; i < d.rank(); i++) diff[i] = dia[i] - ci.nu[i];
    auto coef = coroot_coefficients(d, diff);
    if (!coef) throw internal_error("hn_irreducible: difference outside Q Phi^vee");
    for (const Rat& c : *coef)
        if (!(c > Rat(0))) return false;
    return true;
}

}  // namespace adlv
