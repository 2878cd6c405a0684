#include "adlv/abelian.hpp"

#include <stdexcept>

namespace adlv {

FGAbelianGroup FGAbelianGroup::quotient(int n, const Mat& rel_cols) {
    FGAbelianGroup g;
    g.n = n;
    g.rel = rel_cols.empty() ? Mat(n, Vec{}) : rel_cols;
    g.snf = smith_normal_form(g.rel);
    for (long long d : g.snf.diag)
        if (d > 1) g.invariant_factors.push_back(d);
    g.free_rank = n - g.snf.rank;
    // invert the unimodular U by rational solves (entries are integers)
    g.u_inv_ = Mat(n, Vec(n, 0));
    for (int j = 0; j < n; j++) {
        Vec e(n, 0);
        e[j] = 1;
        auto x = solve_q(g.snf.U, e);
        if (!x) throw std::runtime_error("FGAbelianGroup: U not invertible");
        for (int i = 0; i < n; i++) {
            if (!(*x)[i].is_int()) throw std::runtime_error("FGAbelianGroup: U not unimodular");
            g.u_inv_[i][j] = (*x)[i].n;
        }
    }
    return g;
}

bool FGAbelianGroup::same(const Vec& a, const Vec& b) const {
    Vec d(n);
    for (int i = 0; i < n; i++) d[i] = a[i] - b[i];
    return lattice_contains(rel, d);
}

bool FGAbelianGroup::is_zero(const Vec& a) const { return lattice_contains(rel, a); }

long long FGAbelianGroup::order() const {
    if (!is_finite()) throw std::runtime_error("order(): infinite group");
    long long o = 1;
    for (long long d : snf.diag) o *= d;
    return o;
}

std::vector<Vec> FGAbelianGroup::elements() const {
    if (!is_finite()) throw std::runtime_error("elements(): infinite group");
    std::vector<Vec> coords{Vec(n, 0)};
    for (int i = 0; i < n; i++) {
        std::vector<Vec> next;
        for (const Vec& c : coords)
            for (long long v = 0; v < snf.diag[i]; v++) {
                Vec c2 = c;
                c2[i] = v;
                next.push_back(c2);
            }
        coords = next;
    }
    // map SNF coordinates back to ambient representatives: y = U^-1 c
    std::vector<Vec> out;
    for (const Vec& c : coords) out.push_back(mat_apply(u_inv_, c));
    return out;
}

Vec FGAbelianGroup::canonical_coords(const Vec& a) const {
    Vec c = mat_apply(snf.U, a);
    for (int i = 0; i < snf.rank; i++) {
        long long d = snf.diag[i];
        c[i] = ((c[i] % d) + d) % d;
    }
    return c;
}

bool GroupHom::compatible() const {
    if (src->rel.empty() || src->rel[0].empty()) return true;
    int k = src->rel[0].size();
    for (int j = 0; j < k; j++) {
        Vec col(src->n);
        for (int i = 0; i < src->n; i++) col[i] = src->rel[i][j];
        if (!lattice_contains(dst->rel, mat_apply(M, col))) return false;
    }
    return true;
}

Mat GroupHom::kernel_lattice() const {
    // {x : M x in dst lattice} = projection of ker[M | -dst.rel] to the x block
    int n1 = src->n, n2 = dst->n;
    int k2 = dst->rel.empty() ? 0 : dst->rel[0].size();
    Mat stacked(n2, Vec(n1 + k2, 0));
    for (int i = 0; i < n2; i++) {
        for (int j = 0; j < n1; j++) stacked[i][j] = M[i][j];
        for (int j = 0; j < k2; j++) stacked[i][n1 + j] = -dst->rel[i][j];
    }
    Mat K = kernel_z(stacked);
    int kc = K.empty() ? 0 : K[0].size();
    Mat out(n1, Vec(kc, 0));
    for (int i = 0; i < n1; i++)
        for (int j = 0; j < kc; j++) out[i][j] = K[i][j];
    return out;
}

Mat GroupHom::image_lattice() const {
    int n1 = src->n, n2 = dst->n;
    int k2 = dst->rel.empty() ? 0 : dst->rel[0].size();
    Mat out(n2, Vec(n1 + k2, 0));
    for (int i = 0; i < n2; i++) {
        for (int j = 0; j < n1; j++) out[i][j] = M[i][j];
        for (int j = 0; j < k2; j++) out[i][n1 + j] = dst->rel[i][j];
    }
    return out;
}

}  // namespace adlv
