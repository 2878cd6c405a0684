#include "adlv/affine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "adlv/abelian.hpp"

namespace adlv {

ExtAff aff_identity(const RootDatum& d) { return ExtAff{Vec(d.rank(), 0), Weyl{}}; }
ExtAff aff_translation(const Vec& mu) { return ExtAff{mu, Weyl{}}; }
ExtAff aff_from_weyl(const RootDatum& d, const Weyl& w) { return ExtAff{Vec(d.rank(), 0), w}; }

ExtAff aff_mul(const RootDatum& d, const ExtAff& a, const ExtAff& b) {
    Vec mu = d.weyl_act(a.w, b.mu);
    for (int i = 0; i < d.rank(); i++) mu[i] += a.mu[i];
    return ExtAff{mu, d.weyl_mul(a.w, b.w)};
}

ExtAff aff_inverse(const RootDatum& d, const ExtAff& a) {
    Weyl wi = d.weyl_inverse(a.w);
    Vec mu = d.weyl_act(wi, a.mu);
    for (auto& v : mu) v = -v;
    return ExtAff{mu, wi};
}

ExtAff aff_sigma(const RootDatum& d, const ExtAff& a, int power) {
    return ExtAff{d.sigma_co(a.mu, power), d.sigma_weyl(a.w, power)};
}

bool affroot_positive(const RootDatum& d, const AffRoot& a) {
    if (a.k >= 1) return true;
    if (a.k == 0) return !d.root(a.root).pos;
    return false;
}

AffRoot aff_act_affroot(const RootDatum& d, const ExtAff& x, const AffRoot& a) {
    int beta = d.weyl_act_root(x.w, a.root);
    return AffRoot{beta, a.k + d.pairing(beta, x.mu)};
}

ExtAff affroot_reflection(const RootDatum& d, const AffRoot& a) {
    Vec mu = d.coroot_co(a.root);
    for (auto& v : mu) v *= a.k;
    // s_alpha as Weyl element: dominant_rep machinery is not needed; build from
    // the root's reflection action via word search is overkill -- use the
    // standard fact s_alpha = w s_i w^-1 for any w with w(alpha_i) = alpha.
    for (const Weyl& w : d.weyl_elements()) {
        for (int i = 0; i < d.rank(); i++) {
            if (d.weyl_act_root(w, d.simple_root(i)) == a.root ||
                d.weyl_act_root(w, d.simple_root(i)) == d.negate_root(a.root)) {
                Weyl s = d.weyl_mul(d.weyl_mul(w, Weyl{{i}}), d.weyl_inverse(w));
                return ExtAff{mu, s};
            }
        }
    }
    throw internal_error("affroot_reflection: no conjugating element found");
}

std::vector<SimpleAff> simple_affine(const RootDatum& d) {
    std::vector<SimpleAff> out;
    for (int i = 0; i < d.rank(); i++) {
        AffRoot a{d.negate_root(d.simple_root(i)), 0};
        out.push_back({a, aff_from_weyl(d, Weyl{{i}})});
    }
    for (int c = 0; c < d.num_components(); c++) {
        int th = d.highest_root(c);
        AffRoot a{th, 1};
        out.push_back({a, affroot_reflection(d, a)});
    }
    return out;
}

int sigma_on_saff(const RootDatum& d, int idx, int power) {
    if (idx < d.rank()) {
        int i = idx;
        for (int k = 0; k < ((power % d.sigma_order()) + d.sigma_order()) % d.sigma_order(); k++)
            i = d.sigma_perm()[i];
        return i;
    }
    int c = idx - d.rank();
    int th = d.highest_root(c);
    int th2 = d.sigma_root(th, power);
    return d.rank() + d.root(th2).comp;
}

long long length(const RootDatum& d, const ExtAff& x) {
    Weyl wi = d.weyl_inverse(x.w);
    long long l = 0;
    for (int r : d.positive_roots()) {
        long long p = d.pairing(r, x.mu);
        if (d.root(d.weyl_act_root(wi, r)).pos)
            l += p < 0 ? -p : p;
        else
            l += p - 1 < 0 ? 1 - p : p - 1;
    }
    return l;
}

long long length_direct(const RootDatum& d, const ExtAff& x) {
    long long K = 1;
    for (int r : d.positive_roots()) {
        long long p = d.pairing(r, x.mu);
        K = std::max(K, (p < 0 ? -p : p) + 1);
    }
    long long cnt = 0;
    for (int r = 0; r < d.num_roots(); r++)
        for (long long k = 0; k <= K; k++) {
            AffRoot a{r, k};
            if (!affroot_positive(d, a)) continue;
            if (!affroot_positive(d, aff_act_affroot(d, x, a))) cnt++;
        }
    return cnt;
}

Vec pi1_class_rep(const RootDatum& d, const Vec& mu) {
    return d.minuscule_rep(mu, d.all_nodes());
}

ExtAff omega_elem(const RootDatum& d, const Vec& cls) {
    auto S = d.all_nodes();
    Vec mu = d.minuscule_rep(cls, S);
    std::vector<int> stab;
    for (int i = 0; i < d.rank(); i++)
        if (mu[i] == 0) stab.push_back(i);
    Weyl ux = d.longest_element(stab);
    Weyl wx = d.weyl_mul(ux, d.longest_element(S));
    ExtAff b{mu, wx};
    if (length(d, b) != 0) throw internal_error("omega_elem: not length 0");
    return b;
}

OmegaDecomp omega_decompose(const RootDatum& d, const ExtAff& x) {
    OmegaDecomp od;
    od.tau_class = pi1_class_rep(d, x.mu);
    od.tau = omega_elem(d, od.tau_class);
    ExtAff u = aff_mul(d, x, aff_inverse(d, od.tau));
    auto saff = simple_affine(d);
    std::vector<int> collected;
    long long l = length(d, u);
    while (l > 0) {
        int pick = -1;
        for (size_t i = 0; i < saff.size(); i++)
            if (!affroot_positive(d, aff_act_affroot(d, u, saff[i].a))) { pick = (int)i; break; }
        if (pick < 0) throw internal_error("omega_decompose: positive length but no descent");
        u = aff_mul(d, u, saff[pick].s);
        long long l2 = length(d, u);
        if (l2 != l - 1) throw internal_error("omega_decompose: descent did not reduce length");
        l = l2;
        collected.push_back(pick);
    }
    if (!(u == aff_identity(d))) throw internal_error("omega_decompose: W^a part not identity");
    std::reverse(collected.begin(), collected.end());
    od.word = collected;
    return od;
}

bool bruhat_leq(const RootDatum& d, const ExtAff& u0, const ExtAff& w0) {
    // Same Omega component required
    FGAbelianGroup pi1 = FGAbelianGroup::quotient(d.rank(), d.coroot_lattice(d.all_nodes()));
    if (pi1.canonical_coords(u0.mu) != pi1.canonical_coords(w0.mu)) return false;
    auto saff = simple_affine(d);
    // Deodhar lifting: pick s with ws < w; u <= w iff (us < u ? us <= ws : u <= ws)
    ExtAff u = u0, w = w0;
    while (true) {
        if (u == w) return true;
        long long lu = length(d, u), lw = length(d, w);
        if (lu >= lw) return false;
        int pick = -1;
        for (size_t i = 0; i < saff.size(); i++)
            if (!affroot_positive(d, aff_act_affroot(d, w, saff[i].a))) { pick = (int)i; break; }
        if (pick < 0) return false;  // w has length 0 but u != w
        w = aff_mul(d, w, saff[pick].s);
        ExtAff us = aff_mul(d, u, saff[pick].s);
        if (length(d, us) < lu) u = us;
    }
}

NewtonPoint newton(const RootDatum& d, const ExtAff& x) {
    ExtAff prod = x;
    int bound = d.sigma_order() * (int)d.weyl_elements().size() + 1;
    for (int n = 1; n <= bound; n++) {
        if (prod.w.is_identity() && n % d.sigma_order() == 0) {
            NewtonPoint np;
            np.n = n;
            np.nu.resize(d.rank());
            for (int i = 0; i < d.rank(); i++) np.nu[i] = Rat(prod.mu[i], n);
            np.nu_bar = d.dominant(np.nu);
            return np;
        }
        prod = aff_mul(d, prod, aff_sigma(d, x, n));
    }
    throw internal_error("newton: no pure-translation twisted power found");
}

bool is_straight(const RootDatum& d, const ExtAff& x) {
    NewtonPoint np = newton(d, x);
    return Rat(length(d, x)) == d.two_rho_pairing(np.nu_bar);
}

namespace {

long long alcove_cutoff(const RootDatum& d, const ExtAff& x) {
    long long K = 1;
    for (int r : d.positive_roots()) {
        long long p = d.pairing(r, x.mu);
        K = std::max(K, (p < 0 ? -p : p) + 1);
    }
    return K;
}

// w~ sigma acting on an affine root: w~(sigma(a))
AffRoot twisted_act(const RootDatum& d, const ExtAff& x, const AffRoot& a, int sigma_power = 1) {
    AffRoot sa{d.sigma_root(a.root, sigma_power), a.k};
    return aff_act_affroot(d, x, sa);
}

}  // namespace

bool is_alcove_elem(const RootDatum& d, const ExtAff& x, const RatVec& v) {
    if (d.weyl_act(x.w, d.sigma_co(v)) != v) return false;
    long long K = alcove_cutoff(d, x);
    for (int r = 0; r < d.num_roots(); r++) {
        if (!(d.pairing(r, v) > Rat(0))) continue;
        for (long long k = -K; k <= K; k++) {
            AffRoot a{r, k};
            if (!affroot_positive(d, a)) continue;
            if (!affroot_positive(d, twisted_act(d, x, a))) return false;
        }
    }
    return true;
}

bool is_fundamental(const RootDatum& d, const ExtAff& x, const RatVec& v) {
    if (!is_alcove_elem(d, x, v)) return false;
    ExtAff xi = aff_inverse(d, x);
    long long K = std::max(alcove_cutoff(d, x), alcove_cutoff(d, xi));
    for (int r = 0; r < d.num_roots(); r++) {
        if (!(d.pairing(r, v) == Rat(0))) continue;
        for (long long k = -K; k <= K; k++) {
            AffRoot a{r, k};
            if (!affroot_positive(d, a)) continue;
            // forward: image stays in the v-zero positive set
            AffRoot fa = twisted_act(d, x, a);
            if (!affroot_positive(d, fa) || d.pairing(fa.root, v) != Rat(0)) return false;
            // backward: (w~ sigma)^{-1} = sigma^{-1} w~^{-1}
            AffRoot ba = aff_act_affroot(d, xi, a);
            ba.root = d.sigma_root(ba.root, -1);
            if (!affroot_positive(d, ba) || d.pairing(ba.root, v) != Rat(0)) return false;
        }
    }
    return true;
}

ReduceResult reduce_to_min(const RootDatum& d, const ExtAff& x0) {
    auto saff = simple_affine(d);
    auto step = [&](const ExtAff& y, int i) {
        return aff_mul(d, aff_mul(d, saff[i].s, y),
                       ExtAff{d.sigma_co(saff[i].s.mu), d.sigma_weyl(saff[i].s.w)});
    };
    ReduceResult res;
    res.min = x0;
    size_t budget = 10 * saff.size();
    while (true) {
        long long l = length(d, res.min);
        // eager strict descent
        int pick = -1;
        for (size_t i = 0; i < saff.size(); i++)
            if (length(d, step(res.min, (int)i)) < l) { pick = (int)i; break; }
        if (pick >= 0) {
            res.min = step(res.min, pick);
            res.trace.push_back(pick);
            continue;
        }
        // plateau: breadth-first over equal-length elements, bounded
        std::map<ExtAff, std::pair<ExtAff, int>> parent;  // elem -> (pred, step index)
        std::deque<ExtAff> q{res.min};
        parent.emplace(res.min, std::make_pair(res.min, -1));
        bool advanced = false;
        while (!q.empty()) {
            ExtAff cur = q.front();
            q.pop_front();
            for (size_t i = 0; i < saff.size(); i++) {
                ExtAff nxt = step(cur, (int)i);
                long long ln = length(d, nxt);
                if (ln > l) continue;
                if (ln < l) {
                    // reconstruct the plateau path, then take the descending step
                    std::vector<int> path{(int)i};
                    ExtAff at = cur;
                    while (parent.at(at).second >= 0) {
                        path.push_back(parent.at(at).second);
                        at = parent.at(at).first;
                    }
                    std::reverse(path.begin(), path.end());
                    for (int s : path) res.trace.push_back(s);
                    res.min = nxt;
                    advanced = true;
                    break;
                }
                if (!parent.count(nxt)) {
                    if (parent.size() >= budget) { res.budget_exhausted = true; continue; }
                    parent.emplace(nxt, std::make_pair(cur, (int)i));
                    q.push_back(nxt);
                }
            }
            if (advanced) break;
        }
        if (!advanced) return res;  // no shorter element reachable in budget
        res.budget_exhausted = false;
    }
}

std::vector<Vec> dominant_below(const RootDatum& d, const Vec& lam) {
    std::set<Vec> seen;
    std::vector<Vec> out;
    std::deque<Vec> q{lam};
    seen.insert(lam);
    while (!q.empty()) {
        Vec cur = q.front();
        q.pop_front();
        if (d.is_dominant(cur, d.all_nodes())) out.push_back(cur);
        for (int i = 0; i < d.rank(); i++) {
            Vec nxt = cur;
            const Vec& co = d.coroot_co(d.simple_root(i));
            for (int k = 0; k < d.rank(); k++) nxt[k] -= co[k];
            if (d.two_rho_pairing(nxt) < 0) continue;
            if (seen.insert(nxt).second) q.push_back(nxt);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StraightClassEntry> straight_classes_below(const RootDatum& d, const Vec& lam) {
    if (!d.is_dominant(lam, d.all_nodes())) throw domain_error("straight_classes_below: lam not dominant");
    FGAbelianGroup coinv = FGAbelianGroup::quotient(
        d.rank(), [&] {
            Mat A = d.coroot_lattice(d.all_nodes());
            Mat P = d.sigma_matrix();
            Mat out(d.rank(), Vec(2 * d.rank(), 0));
            for (int i = 0; i < d.rank(); i++)
                for (int j = 0; j < d.rank(); j++) {
                    out[i][j] = A[i][j];
                    out[i][d.rank() + j] = (i == j ? 1 : 0) - P[i][j];
                }
            return out;
        }());
    std::set<ExtAff> seen;
    std::vector<StraightClassEntry> out;
    for (const Vec& lp : dominant_below(d, lam)) {
        std::set<Vec> orbit;
        for (const Weyl& u : d.weyl_elements()) orbit.insert(d.weyl_act(u, lp));
        for (const Vec& mu : orbit)
            for (const Weyl& w : d.weyl_elements()) {
                ExtAff e{mu, w};
                if (!seen.insert(e).second) continue;
                if (!is_straight(d, e)) continue;
                StraightClassEntry sce;
                sce.elem = e;
                sce.kappa_key = coinv.canonical_coords(e.mu);
                sce.nu_bar = newton(d, e).nu_bar;
                out.push_back(sce);
            }
    }
    std::sort(out.begin(), out.end(), [&](const StraightClassEntry& a, const StraightClassEntry& b) {
        long long la = length(d, a.elem), lb = length(d, b.elem);
        if (la != lb) return la < lb;
        return a.elem < b.elem;
    });
    return out;
}

std::string aff_str(const ExtAff& x) {
    std::ostringstream os;
    os << "t[";
    for (size_t i = 0; i < x.mu.size(); i++) os << (i ? "," : "") << x.mu[i];
    os << "];";
    if (x.w.is_identity()) os << "e";
    for (size_t i = 0; i < x.w.word.size(); i++) os << (i ? " " : "") << "s" << (x.w.word[i] + 1);
    return os.str();
}

}  // namespace adlv
