#pragma once
// sigma-conjugacy class invariants of b in W~ (representatives in N_T(L)):
// Kottwitz point in pi1(G)_sigma, dominant Newton point, the nonemptiness
// criterion for X_{<= lam}(b), and basic/superbasic predicates.

#include "adlv/abelian.hpp"
#include "adlv/affine.hpp"

namespace adlv {

struct ClassInvariants {
    Vec kappa_key;    // canonical coords in pi1(G)_sigma = Y / (Z Phi^vee + (1-sigma)Y)
    Vec kappa_rep;    // a representative cocharacter (the translation part of b)
    RatVec nu;        // dominant Newton point; sigma(nu) = nu
};

// pi1(G)_sigma as a quotient of Y
FGAbelianGroup pi1_coinvariants(const RootDatum& d);
// pi1(G) itself
FGAbelianGroup pi1_G(const RootDatum& d);

ClassInvariants invariants_of(const RootDatum& d, const ExtAff& b);

bool is_basic(const RootDatum& d, const ExtAff& b);
// Orbit condition of the superbasic test on an Omega element: each orbit of
// s -> tau sigma(s) tau^-1 on S^a is a union of affine Dynkin components.
bool is_superbasic_omega(const RootDatum& d, const ExtAff& tau);

bool nonempty(const RootDatum& d, const Vec& lam, const ExtAff& b);
bool hn_irreducible(const RootDatum& d, const Vec& lam, const ExtAff& b);

// lam_diamond - nu in simple-coroot coordinates over Q (exact); nullopt if
// outside Q Phi^vee (cannot happen for adjoint simple data).
std::optional<RatVec> coroot_coefficients(const RootDatum& d, const RatVec& target);

}  // namespace adlv
