#pragma once
// Top-level component count: the fiber of (sigma - 1) over the class of
// lam - kappa(b) inside pi1(G), valid as a component index set under
// HN-irreducibility, together with the kernel/lattice consistency layer
// tying the C-set generators to the kernel of pi1(M_J)^sigma -> pi1(G)^sigma.

#include <optional>

#include "adlv/chains.hpp"
#include "adlv/invariants.hpp"

namespace adlv {

struct Pi0Result {
    std::vector<Vec> fiber;  // minuscule coset representatives, sorted
    long long size = 0;
    long long sigma_fixed_order = 0;  // |pi1(G)^sigma|
    bool hn_irred = false;
    bool formula_asserted = false;  // false when not HN-irreducible
    ChooseJResult levi_certificate;
    KernelToG kernel_certificate;
    std::optional<GenSpanResult> span_certificate;  // present when HN-irreducible
};

// Fiber of (sigma-1)x = [lam] - [b] over pi1(G). Requires lam dominant and
// the nonemptiness criterion; the fiber size is 0 or |pi1(G)^sigma|.
Pi0Result pi0(const RootDatum& d, const Vec& lam, const ExtAff& b,
              unsigned long long seed = 0);

struct KernelConsistencyReport {
    bool ok = false;
    Mat generated;  // columns: Phi_J coroots, sigma-orbit sums from C-sets,
                    // and any double-arrow generators needed to close the gap
    Mat kernel;     // the lattice they must span
};

// The sigma-orbit coroot sums attached to the C-sets of the index set,
// together with Z Phi_J^vee, must span the kernel lattice of
// pi1(M_J)^sigma -> pi1(G)^sigma; when they fall short (possible for
// sigma^h-fixed simple roots with small orbits), the certified double-arrow
// generators close the gap and equality must then hold.
KernelConsistencyReport kernel_consistency(const RootDatum& d, const Vec& lam,
                                           const std::vector<int>& J, const ExtAff& b);

}  // namespace adlv
