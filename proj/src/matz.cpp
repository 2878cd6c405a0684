#include "adlv/matz.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace adlv {

static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::runtime_error("matz: int64 overflow");
    return (long long)v;
}

Mat mat_identity(int n) {
    Mat I(n, Vec(n, 0));
    for (int i = 0; i < n; i++) I[i][i] = 1;
    return I;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = a.size(), m = b[0].size(), k = b.size();
    Mat c(n, Vec(m, 0));
    for (int i = 0; i < n; i++)
        for (int l = 0; l < k; l++) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; j++)
                c[i][j] = checked((__int128)c[i][j] + (__int128)a[i][l] * b[l][j]);
        }
    return c;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    Vec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        __int128 s = 0;
        for (size_t j = 0; j < v.size(); j++) s += (__int128)a[i][j] * v[j];
        r[i] = checked(s);
    }
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat t(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < a[0].size(); j++) t[j][i] = a[i][j];
    return t;
}

Mat mat_from_cols(const std::vector<Vec>& cols, int nrows) {
    Mat m(nrows, Vec(cols.size(), 0));
    for (size_t j = 0; j < cols.size(); j++)
        for (int i = 0; i < nrows; i++) m[i][j] = cols[j][i];
    return m;
}

Smith smith_normal_form(const Mat& M) {
    int n = M.size(), m = n ? M[0].size() : 0;
    Smith s;
    s.D = M;
    s.U = mat_identity(n);
    s.V = mat_identity(m);
    Mat& D = s.D;
    Mat& U = s.U;
    Mat& V = s.V;

    auto row_add = [&](int dst, int src, long long f) {  // row dst += f*row src
        for (int j = 0; j < m; j++) D[dst][j] = checked((__int128)D[dst][j] + (__int128)f * D[src][j]);
        for (int j = 0; j < n; j++) U[dst][j] = checked((__int128)U[dst][j] + (__int128)f * U[src][j]);
    };
    auto col_add = [&](int dst, int src, long long f) {
        for (int i = 0; i < n; i++) D[i][dst] = checked((__int128)D[i][dst] + (__int128)f * D[i][src]);
        for (int i = 0; i < m; i++) V[i][dst] = checked((__int128)V[i][dst] + (__int128)f * V[i][src]);
    };
    auto row_swap = [&](int a, int b) { std::swap(D[a], D[b]); std::swap(U[a], U[b]); };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < n; i++) std::swap(D[i][a], D[i][b]);
        for (int i = 0; i < m; i++) std::swap(V[i][a], V[i][b]);
    };
    auto row_neg = [&](int a) {
        for (int j = 0; j < m; j++) D[a][j] = -D[a][j];
        for (int j = 0; j < n; j++) U[a][j] = -U[a][j];
    };

    int t = 0;
    while (t < n && t < m) {
        // find nonzero pivot with least absolute value
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < n; i++)
            for (int j = t; j < m; j++)
                if (D[i][j] != 0 && (pi < 0 || std::llabs(D[i][j]) < best)) {
                    best = std::llabs(D[i][j]);
                    pi = i; pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (D[t][t] < 0) row_neg(t);
        bool clean = true;
        for (int i = t + 1; i < n; i++)
            if (D[i][t] % D[t][t] != 0) { clean = false; break; }
        for (int j = t + 1; j < m && clean; j++)
            if (D[t][j] % D[t][t] != 0) clean = false;
        // eliminate (restart pivot search if a smaller remainder appears)
        for (int i = t + 1; i < n; i++)
            if (D[i][t] != 0) row_add(i, t, -(D[i][t] / D[t][t]));
        for (int j = t + 1; j < m; j++)
            if (D[t][j] != 0) col_add(j, t, -(D[t][j] / D[t][t]));
        bool zeroed = true;
        for (int i = t + 1; i < n; i++) if (D[i][t] != 0) zeroed = false;
        for (int j = t + 1; j < m; j++) if (D[t][j] != 0) zeroed = false;
        if (!zeroed) continue;  // reduced remainders become new, smaller pivots
        // divisibility: fold any entry not divisible by the pivot into column t
        bool redo = false;
        for (int i = t + 1; i < n && !redo; i++)
            for (int j = t + 1; j < m && !redo; j++)
                if (D[i][j] % D[t][t] != 0) { row_add(t, i, 1); redo = true; }
        if (redo) continue;
        t++;
    }
    for (int i = 0; i < t; i++) s.diag.push_back(D[i][i]);
    s.rank = t;
    return s;
}

std::optional<Vec> solve_z(const Mat& B, const Vec& c) {
    int n = B.size(), m = n ? B[0].size() : 0;
    if ((int)c.size() != n) throw std::runtime_error("solve_z: size mismatch");
    if (m == 0) {
        for (long long v : c) if (v != 0) return std::nullopt;
        return Vec{};
    }
    Smith s = smith_normal_form(B);
    Vec uc = mat_apply(s.U, c);
    Vec y(m, 0);
    for (int i = 0; i < n; i++) {
        if (i < s.rank) {
            if (uc[i] % s.diag[i] != 0) return std::nullopt;
            if (i < m) y[i] = uc[i] / s.diag[i];
        } else if (uc[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_apply(s.V, y);
}

bool lattice_contains(const Mat& B, const Vec& c) { return solve_z(B, c).has_value(); }

bool lattice_subset(const Mat& B1, const Mat& B2) {
    if (B1.empty()) return true;
    int m = B1[0].size(), n = B1.size();
    for (int j = 0; j < m; j++) {
        Vec col(n);
        for (int i = 0; i < n; i++) col[i] = B1[i][j];
        if (!lattice_contains(B2, col)) return false;
    }
    return true;
}

bool lattice_equal(const Mat& B1, const Mat& B2) {
    return lattice_subset(B1, B2) && lattice_subset(B2, B1);
}

Mat kernel_z(const Mat& M) {
    int n = M.size(), m = n ? M[0].size() : 0;
    Smith s = smith_normal_form(M);
    // M * (V e_j) = 0 for j >= rank
    Mat K(m, Vec(m - s.rank, 0));
    for (int j = s.rank; j < m; j++)
        for (int i = 0; i < m; i++) K[i][j - s.rank] = s.V[i][j];
    return K;
}

std::optional<RatVec> solve_q(const Mat& B, const Vec& c) {
    int n = B.size(), m = n ? B[0].size() : 0;
    // fraction-free: work over Rat
    std::vector<RatVec> a(n, RatVec(m + 1));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < m; j++) a[i][j] = Rat(B[i][j]);
        a[i][m] = Rat(c[i]);
    }
    std::vector<int> piv_col;
    int r = 0;
    for (int j = 0; j < m && r < n; j++) {
        int p = -1;
        for (int i = r; i < n; i++)
            if (a[i][j] != Rat(0)) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat pivot = a[r][j];
        for (int k = j; k <= m; k++) a[r][k] = a[r][k] / pivot;
        for (int i = 0; i < n; i++) {
            if (i == r || a[i][j] == Rat(0)) continue;
            Rat f = a[i][j];
            for (int k = j; k <= m; k++) a[i][k] = a[i][k] - f * a[r][k];
        }
        piv_col.push_back(j);
        r++;
    }
    for (int i = r; i < n; i++)
        if (a[i][m] != Rat(0)) return std::nullopt;
    RatVec x(m, Rat(0));
    for (int i = 0; i < r; i++) x[piv_col[i]] = a[i][m];
    return x;
}

}  // namespace adlv
