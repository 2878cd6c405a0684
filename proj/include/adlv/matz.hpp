#pragma once
// Integer matrix utilities: Smith normal form with transforms, integer linear
// solves (lattice membership), integer kernels, rational solves. Entries stay
// tiny at desk scale; we still route products through __int128 and check.

#include <optional>
#include <vector>

#include "adlv/rat.hpp"

namespace adlv {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major, Mat[i][j]
using RatVec = std::vector<Rat>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& v);
Mat mat_transpose(const Mat& a);
Mat mat_from_cols(const std::vector<Vec>& cols, int nrows);

struct Smith {
    Mat U, D, V;  // U*M*V = D, U and V unimodular, D diagonal with divisibility
    int rank = 0;
    std::vector<long long> diag;  // nonzero invariant factors (positive)
};

Smith smith_normal_form(const Mat& M);

// Solve B x = c over the integers (x unconstrained); nullopt if unsolvable.
std::optional<Vec> solve_z(const Mat& B, const Vec& c);

// Is c in the lattice spanned by the columns of B?
bool lattice_contains(const Mat& B, const Vec& c);

// Is every column of B1 in the column lattice of B2?
bool lattice_subset(const Mat& B1, const Mat& B2);
bool lattice_equal(const Mat& B1, const Mat& B2);

// Basis (as columns) of { x : M x = 0 } over the integers.
Mat kernel_z(const Mat& M);

// Solve B x = c over the rationals; nullopt if inconsistent. When B has full
// column rank the solution is unique (our only use).
std::optional<RatVec> solve_q(const Mat& B, const Vec& c);

}  // namespace adlv
