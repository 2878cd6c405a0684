#pragma once
// Combinatorial chain machinery on cocharacters: the Theta/Xi sets, the
// contraction decomposition of a coroot difference, the key-root walk, weakly
// dominant orthogonal sets, sigma-twisted step chains between cocharacters
// and between pi1(M_J)-classes, the C-sets with their orbit types, and the
// span test for the coroot lattice. Independent checkers re-verify every
// emitted chain using only the order relations and arithmetic.

#include "adlv/levi.hpp"

namespace adlv {

struct ThetaSets {
    std::vector<int> theta;  // <alpha, mu-mu'> >= 2, mu-alpha^vee and mu'+alpha^vee preceq lam
    std::vector<int> xi;     // <alpha, mu> >= 1 and <alpha, mu'> <= -1
    std::vector<int> xi1;    // <alpha, mu> = 1 and <alpha, mu'> = -1
};
ThetaSets theta_sets(const RootDatum& d, const Vec& mu, const Vec& mup, const Vec& lam);

// A w in W0 making both mu and mu' dominant, if one exists.
std::optional<Weyl> simultaneous_dominant(const RootDatum& d, const Vec& mu, const Vec& mup);

// delta, delta' nonnegative in simple-coroot coordinates. Returns roots
// gamma_k with delta' - delta = sum gamma_k^vee, all partial subset sums
// bounded by delta' above and -delta below, and pairwise <gamma_i,
// gamma_j^vee> >= 0.
std::vector<int> contraction(const RootDatum& d, const Vec& delta, const Vec& deltap);

// For mu + alpha^vee <= lam but not preceq lam: a positive root gamma with
// <gamma, mu+alpha^vee> <= -2, found by walking a reduced word toward the
// dominant representative. When mu is dominant the certificate clauses hold.
struct KeyResult {
    int gamma;
    bool clause_a;  // gamma = -alpha
    bool clause_b;  // gamma long and mu + alpha^vee + gamma^vee <= lam
};
KeyResult key_gamma(const RootDatum& d, const Vec& mu, int alpha, const Vec& lam);

// Simply-laced, mu weakly dominant: orthogonal D in Phi+ with <gamma, mu> = -1
// on D and dominant(mu) - mu = sum of coroots of D.
std::vector<int> weak_orthogonal_D(const RootDatum& d, const Vec& mu);

// One step of a cocharacter chain: mu -> mu + alpha^vee - sigma^r(alpha^vee).
struct ConvStep {
    Vec mu;     // chain point before the step
    int alpha;  // root index
    int r;
};
// Chain from mu to ups (mu - ups in (1-sigma)Y, both preceq lam), each step
// keeping the four witnesses preceq lam and r in the orbit-size range.
// Requires sigma transitive on the diagram components.
std::vector<ConvStep> conv_chain(const RootDatum& d, const Vec& mu, const Vec& ups,
                                 const Vec& lam);
// Independent checker: telescoping, witnesses, ranges. Shares no code with
// the builder beyond the order relations.
bool check_conv_chain(const RootDatum& d, const Vec& mu, const Vec& ups, const Vec& lam,
                      const std::vector<ConvStep>& steps);

// x ->(alpha,r) x' on pi1(M_J)-classes, and the non-factorizable refinement.
struct StepRelation {
    bool arrow = false;
    bool tail = false;
};
StepRelation step_relation(const RootDatum& d, const Vec& lam, const std::vector<int>& J,
                           const Vec& x, const Vec& xp, int alpha, int r);

struct ChainStep {
    Vec from_x, to_x;  // J-dominant J-minuscule class representatives
    int alpha;         // root index, alpha not in Phi_J
    int r;
    Vec mu_x, mu_xa, mu_xs, mu_xp;  // the four witnesses, all preceq lam
};
// Decompose an arrow step into tail steps; the sigma-orbit coroot sums of the
// output add up to that of the input.
std::vector<ChainStep> refine_to_tail(const RootDatum& d, const Vec& lam,
                                      const std::vector<int>& J, const Vec& x, const Vec& xp,
                                      int alpha, int r);

// The unique root of Phi - Phi_J whose coroot differs from beta^vee by
// Z Phi_J^vee and is J-anti-dominant and J-minuscule.
int beta_J(const RootDatum& d, int beta, const std::vector<int>& J);

// Chain of arrow steps between two classes of the lam-index set, with
// J-anti-dominant J-minuscule alpha_j and orbit-size-bounded r_j.
std::vector<ChainStep> convv_chain(const RootDatum& d, const Vec& lam,
                                   const std::vector<int>& J, const ExtAff& b, const Vec& x,
                                   const Vec& xp);
// Independent checker for class chains: telescoping in pi1(M_J), witness
// conditions, clause ranges.
bool check_chain_steps(const RootDatum& d, const Vec& lam, const std::vector<int>& J,
                       const Vec& x, const Vec& xp, const std::vector<ChainStep>& steps);

// Positive roots alpha with mu + alpha^vee preceq lam.
std::vector<int> upsilon_plus(const RootDatum& d, const Vec& mu, const Vec& lam);

// C-set at x: J-minuscule J-anti-dominant coroots in upsilon_plus(mu_x, lam);
// in the G2-with-short-orbit-J case the modified definition applies.
struct CSet {
    std::vector<int> roots;
    bool g2_modified = false;
};
CSet c_set(const RootDatum& d, const Vec& lam, const std::vector<int>& J, const ExtAff& b,
           const Vec& x);

// Orbit type of alpha relative to J: d_min is the minimal d > 0 with alpha and
// sigma^d(alpha) in one component of Phi_{J,alpha} = Phi cap Z(Phi_J u O_alpha);
// type = orbit size / d_min in {1 = I, 2 = II, 3 = III}; alpha_tilde by the
// case formula with the common neighbor beta (-1 when absent).
struct OrbitTypeResult {
    int type;
    int alpha_tilde;
    int d_min;
    int beta;
};
OrbitTypeResult orbit_type_and_tilde(const RootDatum& d, int alpha, const std::vector<int>& J);

// Z Phi^vee spanned by Phi_J^vee together with the sigma-orbits of the C-set.
struct GenSpanResult {
    bool ok = false;
    Mat generators;  // columns: the generating coweights used
};
GenSpanResult gen_span_check(const RootDatum& d, const Vec& lam, const std::vector<int>& J,
                             const ExtAff& b, const Vec& x);

}  // namespace adlv
