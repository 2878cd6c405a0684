#pragma once
// Extended affine Weyl group W~ = Y x| W0 with sigma-action: length, Bruhat
// order, Omega, Newton cocharacter, sigma-conjugation reduction, and the
// straight / alcove / fundamental predicates at the affine-root level.
//
// Affine roots a = (alpha, k) are the functions a(v) = -<alpha, v> + k.
// a is positive iff k >= 1, or k = 0 and alpha negative (a > 0 on the base
// alcove 0 < <alpha,v> < 1 for positive alpha).

#include <optional>
#include <string>
#include <vector>

#include "adlv/rootdatum.hpp"

namespace adlv {

struct ExtAff {
    Vec mu;   // translation part, fundamental-coweight coords
    Weyl w;   // finite part
    bool operator==(const ExtAff& o) const { return mu == o.mu && w == o.w; }
    bool operator!=(const ExtAff& o) const { return !(*this == o); }
    bool operator<(const ExtAff& o) const { return mu != o.mu ? mu < o.mu : w.word < o.w.word; }
};

struct AffRoot {
    int root;      // index into datum roots
    long long k;   // level
    bool operator==(const AffRoot& o) const { return root == o.root && k == o.k; }
};

ExtAff aff_identity(const RootDatum& d);
ExtAff aff_translation(const Vec& mu);
ExtAff aff_mul(const RootDatum& d, const ExtAff& a, const ExtAff& b);
ExtAff aff_inverse(const RootDatum& d, const ExtAff& a);
ExtAff aff_sigma(const RootDatum& d, const ExtAff& a, int power = 1);
ExtAff aff_from_weyl(const RootDatum& d, const Weyl& w);

bool affroot_positive(const RootDatum& d, const AffRoot& a);
// w~(a) for w~ = t^mu w: (w(alpha), k + <w(alpha), mu>)
AffRoot aff_act_affroot(const RootDatum& d, const ExtAff& x, const AffRoot& a);
// reflection s_a = t^{k alpha^vee} s_alpha
ExtAff affroot_reflection(const RootDatum& d, const AffRoot& a);

// Simple affine reflections S^a: indices 0..n-1 are the finite s_i; n+c is
// t^{theta_c^vee} s_{theta_c} for component c. Each with its simple affine root.
struct SimpleAff {
    AffRoot a;
    ExtAff s;
};
std::vector<SimpleAff> simple_affine(const RootDatum& d);
int sigma_on_saff(const RootDatum& d, int saff_index, int power = 1);

long long length(const RootDatum& d, const ExtAff& x);          // Iwahori-Matsumoto formula
long long length_direct(const RootDatum& d, const ExtAff& x);   // inversion count (cross-check)

// pi1(G)-class bookkeeping
Vec pi1_class_rep(const RootDatum& d, const Vec& mu);           // minuscule rep mod Z Phi^vee
ExtAff omega_elem(const RootDatum& d, const Vec& cls);          // length-0 element with eta_G = cls

struct OmegaDecomp {
    std::vector<int> word;  // reduced word in S^a indices for the W^a part
    ExtAff tau;             // Omega part
    Vec tau_class;          // its class in pi1(G)
};
OmegaDecomp omega_decompose(const RootDatum& d, const ExtAff& x);

bool bruhat_leq(const RootDatum& d, const ExtAff& u, const ExtAff& w);

struct NewtonPoint {
    RatVec nu;       // xi / n
    RatVec nu_bar;   // dominant representative
    int n;           // minimal exponent with (w~ sigma)^n = t^xi
};
NewtonPoint newton(const RootDatum& d, const ExtAff& x);

bool is_straight(const RootDatum& d, const ExtAff& x);          // l(w~) = <2rho, nu_bar>

bool is_alcove_elem(const RootDatum& d, const ExtAff& x, const RatVec& v);
bool is_fundamental(const RootDatum& d, const ExtAff& x, const RatVec& v);

struct ReduceResult {
    ExtAff min;
    std::vector<int> trace;     // S^a indices of the steps taken
    bool budget_exhausted = false;
};
// Greedy w -> s w sigma(s) with nonincreasing length; plateaus explored
// breadth-first with budget 10*|S^a| elements per plateau.
ReduceResult reduce_to_min(const RootDatum& d, const ExtAff& x);

struct StraightClassEntry {
    ExtAff elem;
    Vec kappa_key;   // canonical coords in pi1(G)_sigma
    RatVec nu_bar;
};
// All sigma-straight elements of U_{lam' preceq lam} W0 t^{lam'} W0, lam dominant.
std::vector<StraightClassEntry> straight_classes_below(const RootDatum& d, const Vec& lam);

// All dominant lam' with lam' <= lam (includes lam).
std::vector<Vec> dominant_below(const RootDatum& d, const Vec& lam);

std::string aff_str(const ExtAff& x);  // debug/JSON-ish rendering

}  // namespace adlv
