#pragma once
// Levi subdata M_J for sigma-stable J: relative length and Omega_J, the
// canonical length-0 elements b_x, admissibility of (J, b), the index set of
// J-dominant J-minuscule cocharacters below lam, the J-selection pipeline
// that conjugates b into a superbasic Omega_J element, and the kernel of
// pi1(M_J)^sigma -> pi1(G)^sigma.

#include <map>
#include <random>

#include "adlv/invariants.hpp"

namespace adlv {

struct LeviDatum {
    std::vector<int> J;                       // sorted, sigma-stable
    std::vector<std::vector<int>> components; // nodes per component of Phi_J
    std::vector<int> highest;                 // highest-root index per component
};
LeviDatum make_levi(const RootDatum& d, const std::vector<int>& J);

// Iwahori-Matsumoto length relative to Phi_J (finite part must lie in W_J).
long long length_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& x);
bool in_omega_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& x);

// Simple affine reflections of the affine Weyl group of M_J, with the
// Phi_J-component each node belongs to (finite nodes first, then one affine
// node per component).
struct LeviSimpleAff {
    ExtAff s;
    int comp;
};
std::vector<LeviSimpleAff> simple_affine_levi(const RootDatum& d, const LeviDatum& L);

// tau in Omega_J is superbasic iff each orbit of s -> tau sigma(s) tau^-1 on
// the simple affine reflections is a union of whole affine diagram components.
bool is_superbasic_levi(const RootDatum& d, const std::vector<int>& J, const ExtAff& tau);

FGAbelianGroup pi1_levi(const RootDatum& d, const std::vector<int>& J);
FGAbelianGroup pi1_levi_coinvariants(const RootDatum& d, const std::vector<int>& J);

// b_x = t^{mu_x} w_x with mu_x the J-dominant J-minuscule representative of x
// and w_x = u_x w_J, u_x the longest element of the stabilizer of mu_x in W_J.
struct CanonicalOmegaElem {
    Vec mu;
    Weyl w;
    ExtAff b;
};
CanonicalOmegaElem make_bx(const RootDatum& d, const std::vector<int>& J, const Vec& x);

// (J, b) is admissible iff nu_[b] is central on Phi_J and some x in pi1(M_J)
// has nu_{b_x} = nu_[b] and the same image in pi1(G)_sigma as b. The witness
// search window is bounded; `widen` enlarges it for cross-checking.
struct AdmissibleResult {
    bool ok = false;
    Vec witness;  // mu_x of a witnessing x when ok
};
AdmissibleResult is_admissible(const RootDatum& d, const std::vector<int>& J,
                               const ExtAff& b, int widen = 0);

// All J-dominant J-minuscule mu with mu preceq lam and kappa_J(mu) equal to
// the kappa_J-point of the witnessing class of (J, b). Sorted, deduplicated.
std::vector<Vec> ibar(const RootDatum& d, const Vec& lam, const std::vector<int>& J,
                      const ExtAff& b);

// Selection pipeline: straight representative of [b] below lam, conjugation
// to an Omega_{J_nu}-element with weakly dominant translation part, a generic
// sigma-fixed point v0 near nu_bar, and the final (J, w0) with w0 superbasic
// in Omega_J. All postconditions are re-verified; any failure throws.
struct ChooseJResult {
    std::vector<int> J;
    Weyl z0;            // minimal element with z0(v0) dominant
    ExtAff w0;          // = z0 * diamond * sigma(z0)^-1, in Omega_J
    ExtAff straight;    // the straight element matched to [b]
    ExtAff diamond;     // z * straight * sigma(z)^-1, in Omega_{J_nu}
    RatVec nu_bar;
    RatVec v0;          // certified generic point of the fixed space
    Vec chi0;           // translation part of w0
    unsigned long long seed = 0;
    std::map<std::string, bool> checks;
};
ChooseJResult choose_J(const RootDatum& d, const Vec& lam, const ExtAff& b,
                       unsigned long long seed = 0);

// Kernel of pi1(M_J)^sigma -> pi1(G)^sigma, as a sublattice K of Y containing
// Z Phi_J^vee (the kernel subgroup is K / Z Phi_J^vee). Also checks that the
// sigma-orbit sums y_alpha = sum_{beta in O_alpha} beta^vee span it.
struct KernelToG {
    Mat kernel;   // columns generate K
    Mat y_cols;   // the y_alpha, one per sigma-orbit of roots
    bool span_ok = false;
};
KernelToG kernel_to_G(const RootDatum& d, const std::vector<int>& J);

}  // namespace adlv
