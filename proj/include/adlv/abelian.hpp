#pragma once
// Finitely generated abelian groups presented as Z^n / L for a relation
// lattice L (given by generating columns), via Smith normal form. Used for
// pi1(G) = Y/ZPhi^vee, pi1(M_J), their sigma-(co)invariants, kernels, fibers.

#include <vector>

#include "adlv/matz.hpp"

namespace adlv {

struct FGAbelianGroup {
    int n = 0;        // ambient rank, group = Z^n / lattice(rel columns)
    Mat rel;          // n x k relation columns
    Smith snf;        // SNF of rel
    std::vector<long long> invariant_factors;  // diag entries > 1
    int free_rank = 0;

    static FGAbelianGroup quotient(int n, const Mat& rel_cols);

    bool same(const Vec& a, const Vec& b) const;
    bool is_zero(const Vec& a) const;
    bool is_finite() const { return free_rank == 0; }
    long long order() const;                    // finite groups only
    std::vector<Vec> elements() const;          // finite groups only; one rep per class
    // Canonical per-class key: SNF coordinates, torsion part normalized to [0, d_i).
    Vec canonical_coords(const Vec& a) const;

  private:
    Mat u_inv_;  // inverse of snf.U (unimodular)
};

// Homomorphism G1 -> G2 given by an integer matrix on ambient coordinates.
struct GroupHom {
    const FGAbelianGroup* src = nullptr;
    const FGAbelianGroup* dst = nullptr;
    Mat M;  // dst.n x src.n

    bool compatible() const;     // M * src.rel subset of dst lattice
    Mat kernel_lattice() const;  // columns spanning {x in Z^src.n : Mx in dst lattice}
    Mat image_lattice() const;   // columns spanning image + dst relations
};

}  // namespace adlv
