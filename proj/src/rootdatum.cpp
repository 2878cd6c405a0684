#include "adlv/rootdatum.hpp"

#include <algorithm>
#include <set>

namespace adlv {

namespace {

struct CompData {
    Mat cartan;
    std::vector<long long> sym;  // d_i = (alpha_i,alpha_i)/2, Bourbaki normalization
};

CompData component_data(const std::string& t) {
    auto chain = [](int r) {
        Mat A(r, Vec(r, 0));
        for (int i = 0; i < r; i++) {
            A[i][i] = 2;
            if (i + 1 < r) A[i][i + 1] = A[i + 1][i] = -1;
        }
        return A;
    };
    if (t == "A1") return {chain(1), {1}};
    if (t == "A2") return {chain(2), {1, 1}};
    if (t == "A3") return {chain(3), {1, 1, 1}};
    if (t == "A4") return {chain(4), {1, 1, 1, 1}};
    if (t == "B2") return {Mat{{2, -2}, {-1, 2}}, {2, 1}};   // alpha1 long, alpha2 short
    if (t == "G2") return {Mat{{2, -1}, {-3, 2}}, {1, 3}};   // alpha1 short, alpha2 long
    if (t == "D4") {
        // Bourbaki: alpha2 (index 1) is the branch node
        Mat A{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
        return {A, {1, 1, 1, 1}};
    }
    throw domain_error("unknown component type: " + t);
}

}  // namespace

RootDatum::RootDatum(const std::string& type, int h, const std::vector<int>& sigma)
    : type_(type), h_(h), sigma_(sigma) {
    if (h < 1) throw domain_error("components must be >= 1");
    CompData cd = component_data(type);
    comp_rank_ = cd.cartan.size();
    n_ = comp_rank_ * h_;
    A_ = Mat(n_, Vec(n_, 0));
    comp_of_node_.resize(n_);
    symmetrizer_.resize(n_);
    for (int c = 0; c < h_; c++)
        for (int i = 0; i < comp_rank_; i++) {
            comp_of_node_[c * comp_rank_ + i] = c;
            symmetrizer_[c * comp_rank_ + i] = cd.sym[i];
            for (int j = 0; j < comp_rank_; j++)
                A_[c * comp_rank_ + i][c * comp_rank_ + j] = cd.cartan[i][j];
        }
    if ((int)sigma_.size() != n_) throw domain_error("sigma permutation has wrong size");
    sigma_inv_.resize(n_);
    std::vector<bool> seen(n_, false);
    for (int i = 0; i < n_; i++) {
        if (sigma_[i] < 0 || sigma_[i] >= n_ || seen[sigma_[i]])
            throw domain_error("sigma is not a permutation");
        seen[sigma_[i]] = true;
        sigma_inv_[sigma_[i]] = i;
    }
    for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++)
            if (A_[sigma_[i]][sigma_[j]] != A_[i][j])
                throw domain_error("sigma does not preserve the Cartan matrix");
    // order of sigma
    std::vector<int> id(n_), p = sigma_;
    for (int i = 0; i < n_; i++) id[i] = i;
    sigma_order_ = 1;
    while (p != id) {
        for (int i = 0; i < n_; i++) p[i] = sigma_[p[i]];
        sigma_order_++;
        if (sigma_order_ > n_ * n_ + 2) throw internal_error("sigma order runaway");
    }
    build_roots();
    build_weyl();
}

bool RootDatum::sigma_transitive_on_components() const {
    std::vector<bool> hit(h_, false);
    int c = 0, cnt = 0;
    int node = 0;
    for (int k = 0; k < sigma_order_; k++) {
        c = comp_of_node_[node];
        if (!hit[c]) { hit[c] = true; cnt++; }
        node = sigma_[node];
    }
    return cnt == h_;
}

void RootDatum::build_roots() {
    simple_.resize(n_);
    for (int i = 0; i < n_; i++) {
        RootInfo r;
        r.rc = Vec(n_, 0);
        r.cc = Vec(n_, 0);
        r.rc[i] = r.cc[i] = 1;
        r.fc = Vec(n_, 0);
        for (int k = 0; k < n_; k++) r.fc[k] = A_[k][i];
        r.pos = true;
        r.comp = comp_of_node_[i];
        r.len2 = 2 * symmetrizer_[i];
        root_idx_[r.rc] = i;
        roots_.push_back(r);
        simple_[i] = i;
    }
    // closure under simple reflections
    for (size_t head = 0; head < roots_.size(); head++) {
        for (int j = 0; j < n_; j++) {
            RootInfo cur = roots_[head];  // copy: vector may reallocate
            long long p = 0, q = 0;
            for (int i = 0; i < n_; i++) p += cur.rc[i] * A_[i][j];  // <alpha, alpha_j^vee>
            for (int k = 0; k < n_; k++) q += cur.cc[k] * A_[j][k];  // <alpha_j, alpha^vee>
            RootInfo nr = cur;
            nr.rc[j] -= p;
            nr.cc[j] -= q;
            if (root_idx_.count(nr.rc)) continue;
            for (int k = 0; k < n_; k++) nr.fc[k] = 0;
            for (int k = 0; k < n_; k++)
                for (int l = 0; l < n_; l++) nr.fc[k] += A_[k][l] * nr.cc[l];
            bool has_pos = false, has_neg = false;
            for (long long v : nr.rc) { if (v > 0) has_pos = true; if (v < 0) has_neg = true; }
            if (has_pos && has_neg) throw internal_error("root with mixed signs");
            nr.pos = has_pos;
            root_idx_[nr.rc] = (int)roots_.size();
            roots_.push_back(nr);
        }
    }
    // negatives, positivity list, reflection tables
    for (size_t r = 0; r < roots_.size(); r++) {
        Vec neg = roots_[r].rc;
        for (auto& v : neg) v = -v;
        roots_[r].neg = root_idx_.at(neg);
        if (roots_[r].pos) pos_.push_back((int)r);
    }
    sref_root_.assign(n_, std::vector<int>(roots_.size()));
    for (int j = 0; j < n_; j++)
        for (size_t r = 0; r < roots_.size(); r++) {
            Vec rc = roots_[r].rc;
            long long p = 0;
            for (int i = 0; i < n_; i++) p += rc[i] * A_[i][j];
            rc[j] -= p;
            sref_root_[j][r] = root_idx_.at(rc);
        }
    sigma_root_.resize(roots_.size());
    for (size_t r = 0; r < roots_.size(); r++) {
        Vec rc(n_, 0);
        for (int i = 0; i < n_; i++) rc[sigma_[i]] = roots_[r].rc[i];
        sigma_root_[r] = root_idx_.at(rc);
    }
    // highest root per component (max height)
    highest_.assign(h_, -1);
    std::vector<long long> best(h_, -1);
    for (int r : pos_) {
        long long ht = 0;
        int c = -1;
        for (int i = 0; i < n_; i++)
            if (roots_[r].rc[i]) { ht += roots_[r].rc[i]; c = comp_of_node_[i]; }
        if (ht > best[c]) { best[c] = ht; highest_[c] = r; }
    }
    two_rho_ = Vec(n_, 0);
    for (int r : pos_)
        for (int i = 0; i < n_; i++) two_rho_[i] += roots_[r].rc[i];
}

int RootDatum::root_index(const Vec& rc) const {
    auto it = root_idx_.find(rc);
    return it == root_idx_.end() ? -1 : it->second;
}

long long RootDatum::pairing(int r, const Vec& mu) const {
    long long s = 0;
    for (int i = 0; i < n_; i++) s += roots_[r].rc[i] * mu[i];
    return s;
}

Rat RootDatum::pairing(int r, const RatVec& mu) const {
    Rat s(0);
    for (int i = 0; i < n_; i++) s = s + Rat(roots_[r].rc[i]) * mu[i];
    return s;
}

long long RootDatum::pairing_rr(int r, int s) const {
    long long v = 0;
    for (int i = 0; i < n_; i++) v += roots_[r].rc[i] * roots_[s].fc[i];
    return v;
}

Vec RootDatum::sigma_co(const Vec& mu, int power) const {
    power = ((power % sigma_order_) + sigma_order_) % sigma_order_;
    Vec cur = mu;
    for (int k = 0; k < power; k++) {
        Vec next(n_);
        for (int i = 0; i < n_; i++) next[i] = cur[sigma_inv_[i]];
        cur = next;
    }
    return cur;
}

RatVec RootDatum::sigma_co(const RatVec& mu, int power) const {
    power = ((power % sigma_order_) + sigma_order_) % sigma_order_;
    RatVec cur = mu;
    for (int k = 0; k < power; k++) {
        RatVec next(n_);
        for (int i = 0; i < n_; i++) next[i] = cur[sigma_inv_[i]];
        cur = next;
    }
    return cur;
}

int RootDatum::sigma_root(int r, int power) const {
    power = ((power % sigma_order_) + sigma_order_) % sigma_order_;
    int cur = r;
    for (int k = 0; k < power; k++) cur = sigma_root_[cur];
    return cur;
}

Weyl RootDatum::sigma_weyl(const Weyl& w, int power) const {
    power = ((power % sigma_order_) + sigma_order_) % sigma_order_;
    std::vector<int> word = w.word;
    for (auto& l : word)
        for (int k = 0; k < power; k++) l = sigma_[l];
    return canonical_weyl(word);
}

std::vector<int> RootDatum::sigma_orbit_root(int r) const {
    std::vector<int> orb{r};
    int cur = sigma_root_[r];
    while (cur != r) { orb.push_back(cur); cur = sigma_root_[cur]; }
    return orb;
}

RatVec RootDatum::diamond(const Vec& lam) const {
    RatVec s(n_, Rat(0));
    Vec cur = lam;
    for (int k = 0; k < sigma_order_; k++) {
        for (int i = 0; i < n_; i++) s[i] = s[i] + Rat(cur[i], sigma_order_);
        cur = sigma_co(cur);
    }
    return s;
}

Vec RootDatum::sref_co(int j, const Vec& mu) const {
    Vec r = mu;
    long long c = mu[j];
    for (int i = 0; i < n_; i++) r[i] -= c * A_[i][j];
    return r;
}

Weyl RootDatum::canonical_weyl(const std::vector<int>& word) const {
    std::vector<int> cur = word, collected;
    auto act_root = [&](int r) {
        for (auto it = cur.rbegin(); it != cur.rend(); ++it) r = sref_root_[*it][r];
        return r;
    };
    while (true) {
        int desc = -1;
        for (int j = 0; j < n_; j++)
            if (!roots_[act_root(simple_[j])].pos) { desc = j; break; }
        if (desc < 0) break;
        collected.push_back(desc);
        cur.push_back(desc);
    }
    std::reverse(collected.begin(), collected.end());
    return Weyl{collected};
}

Weyl RootDatum::weyl_mul(const Weyl& a, const Weyl& b) const {
    std::vector<int> w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    return canonical_weyl(w);
}

Weyl RootDatum::weyl_inverse(const Weyl& a) const {
    std::vector<int> w(a.word.rbegin(), a.word.rend());
    return canonical_weyl(w);
}

Vec RootDatum::weyl_act(const Weyl& w, const Vec& mu) const {
    Vec r = mu;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = sref_co(*it, r);
    return r;
}

RatVec RootDatum::weyl_act(const Weyl& w, const RatVec& mu) const {
    RatVec r = mu;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        Rat c = r[*it];
        for (int i = 0; i < n_; i++) r[i] = r[i] - c * Rat(A_[i][*it]);
    }
    return r;
}

int RootDatum::weyl_act_root(const Weyl& w, int r) const {
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = sref_root_[*it][r];
    return r;
}

void RootDatum::build_weyl() {
    std::set<std::vector<int>> seen;
    std::vector<Weyl> frontier{Weyl{}};
    seen.insert(std::vector<int>{});
    while (!frontier.empty()) {
        std::vector<Weyl> next;
        for (const Weyl& w : frontier)
            for (int j = 0; j < n_; j++) {
                Weyl c = weyl_mul(w, Weyl{{j}});
                if (seen.insert(c.word).second) next.push_back(c);
            }
        for (const Weyl& w : frontier) weyl_all_.push_back(w);
        frontier = next;
    }
    std::sort(weyl_all_.begin(), weyl_all_.end(), [](const Weyl& a, const Weyl& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
}

std::vector<Weyl> RootDatum::weyl_elements(const std::vector<int>& J) const {
    std::set<std::vector<int>> seen;
    std::vector<Weyl> out, frontier{Weyl{}};
    seen.insert(std::vector<int>{});
    while (!frontier.empty()) {
        std::vector<Weyl> next;
        for (const Weyl& w : frontier)
            for (int j : J) {
                Weyl c = weyl_mul(w, Weyl{{j}});
                if (seen.insert(c.word).second) next.push_back(c);
            }
        for (const Weyl& w : frontier) out.push_back(w);
        frontier = next;
    }
    std::sort(out.begin(), out.end(), [](const Weyl& a, const Weyl& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    return out;
}

Weyl RootDatum::longest_element(const std::vector<int>& J) const {
    Weyl best;
    for (const Weyl& w : weyl_elements(J))
        if (w.length() > best.length()) best = w;
    return best;
}

std::pair<Vec, Weyl> RootDatum::dominant_rep(const Vec& mu, const std::vector<int>& J) const {
    Vec cur = mu;
    std::vector<int> applied;
    while (true) {
        int pick = -1;
        for (int j : J)
            if (cur[j] < 0) { pick = pick < 0 || j < pick ? j : pick; }
        if (pick < 0) break;
        cur = sref_co(pick, cur);
        applied.push_back(pick);
    }
    std::reverse(applied.begin(), applied.end());
    return {cur, canonical_weyl(applied)};
}

std::pair<RatVec, Weyl> RootDatum::dominant_rep(const RatVec& mu, const std::vector<int>& J) const {
    RatVec cur = mu;
    std::vector<int> applied;
    while (true) {
        int pick = -1;
        for (int j : J)
            if (cur[j] < Rat(0)) { pick = pick < 0 || j < pick ? j : pick; }
        if (pick < 0) break;
        Rat c = cur[pick];
        for (int i = 0; i < n_; i++) cur[i] = cur[i] - c * Rat(A_[i][pick]);
        applied.push_back(pick);
    }
    std::reverse(applied.begin(), applied.end());
    return {cur, canonical_weyl(applied)};
}

bool RootDatum::leq_J(const Vec& mu, const Vec& lam, const std::vector<int>& J) const {
    Vec diff(n_);
    for (int i = 0; i < n_; i++) diff[i] = lam[i] - mu[i];
    if (J.empty()) {
        for (long long v : diff) if (v != 0) return false;
        return true;
    }
    std::vector<Vec> cols;
    for (int j : J) cols.push_back(roots_[simple_[j]].fc);
    auto sol = solve_q(mat_from_cols(cols, n_), diff);
    if (!sol) return false;
    // simple coroots are linearly independent: verify and demand N-coefficients
    Vec check(n_, 0);
    for (size_t k = 0; k < cols.size(); k++) {
        if (!(*sol)[k].is_int() || (*sol)[k].n < 0) return false;
        for (int i = 0; i < n_; i++) check[i] += (*sol)[k].n * cols[k][i];
    }
    return check == diff;
}

bool RootDatum::preceq_J(const Vec& mu, const Vec& lam, const std::vector<int>& J) const {
    return leq_J(dominant_rep(mu, J).first, dominant_rep(lam, J).first, J);
}

bool RootDatum::is_dominant(const Vec& mu, const std::vector<int>& J) const {
    for (int j : J)
        if (mu[j] < 0) return false;
    return true;
}

bool RootDatum::is_weakly_dominant(const Vec& mu) const {
    for (int r : pos_)
        if (pairing(r, mu) < -1) return false;
    return true;
}

bool RootDatum::is_minuscule(const Vec& mu, const std::vector<int>& J) const {
    for (int r : roots_in_span(J)) {
        long long p = pairing(r, mu);
        if (p < -1 || p > 1) return false;
    }
    return true;
}

Vec RootDatum::minuscule_rep(const Vec& mu, const std::vector<int>& J) const {
    // Reduce to the unique J-dominant J-minuscule representative mod Z*Phi_J^vee.
    // Subtracting alpha^vee for any alpha in Phi_J+ with <alpha,mu> >= 2 strictly
    // decreases the W-invariant norm, so this terminates.
    std::vector<int> phiJ = roots_in_span(J);
    Vec cur = mu;
    for (int guard = 0; guard < 100000; guard++) {
        cur = dominant_rep(cur, J).first;
        int pick = -1;
        for (int r : phiJ) {
            if (!roots_[r].pos) continue;
            if (pairing(r, cur) >= 2) { pick = r; break; }
        }
        if (pick < 0) {
            if (!is_minuscule(cur, J) || !is_dominant(cur, J))
                throw internal_error("minuscule_rep postcondition failed");
            return cur;
        }
        for (int i = 0; i < n_; i++) cur[i] -= roots_[pick].fc[i];
    }
    throw internal_error("minuscule_rep did not terminate");
}

Mat RootDatum::coroot_lattice(const std::vector<int>& J) const {
    std::vector<Vec> cols;
    for (int j : J) cols.push_back(roots_[simple_[j]].fc);
    return mat_from_cols(cols, n_);
}

Mat RootDatum::sigma_matrix() const {
    Mat P(n_, Vec(n_, 0));
    // coords(sigma mu)[i] = mu[sigma_inv(i)]
    for (int i = 0; i < n_; i++) P[i][sigma_inv_[i]] = 1;
    return P;
}

std::vector<int> RootDatum::all_nodes() const {
    std::vector<int> J(n_);
    for (int i = 0; i < n_; i++) J[i] = i;
    return J;
}

std::vector<int> RootDatum::roots_in_span(const std::vector<int>& J) const {
    std::vector<bool> in(n_, false);
    for (int j : J) in[j] = true;
    std::vector<int> out;
    for (size_t r = 0; r < roots_.size(); r++) {
        bool ok = true;
        for (int i = 0; i < n_; i++)
            if (roots_[r].rc[i] != 0 && !in[i]) { ok = false; break; }
        if (ok) out.push_back((int)r);
    }
    return out;
}

bool RootDatum::simply_laced() const {
    return type_ != "B2" && type_ != "G2";
}

long long RootDatum::two_rho_pairing(const Vec& mu) const {
    long long s = 0;
    for (int i = 0; i < n_; i++) s += two_rho_[i] * mu[i];
    return s;
}

Rat RootDatum::two_rho_pairing(const RatVec& mu) const {
    Rat s(0);
    for (int i = 0; i < n_; i++) s = s + Rat(two_rho_[i]) * mu[i];
    return s;
}

}  // namespace adlv
