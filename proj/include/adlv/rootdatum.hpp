#pragma once
// Twisted root datum: a finite (possibly decomposable) simple-type Cartan
// matrix with a diagram automorphism sigma, in the adjoint normalization
// (Y = full coweight lattice). Coordinate conventions:
//   - cocharacters mu are stored in fundamental-coweight coordinates,
//     coords(mu)[i] = <alpha_i, mu>;
//   - roots are stored in simple-root coordinates;
//   - so the pairing <alpha, mu> is the dot product of the root's coefficient
//     vector with coords(mu).
// Simple roots are numbered per component following Bourbaki; components are
// laid out consecutively.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adlv/matz.hpp"

namespace adlv {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite Weyl group element, held as the canonical reduced word produced by
// greedy right-descent extraction (smallest descent first). Word is a product
// left-to-right: word = {a,b} means s_a s_b, applied to vectors rightmost first.
struct Weyl {
    std::vector<int> word;
    bool operator==(const Weyl& o) const { return word == o.word; }
    bool operator!=(const Weyl& o) const { return !(*this == o); }
    bool operator<(const Weyl& o) const { return word < o.word; }
    bool is_identity() const { return word.empty(); }
    int length() const { return (int)word.size(); }
};

struct RootInfo {
    Vec rc;   // simple-root coordinates of alpha
    Vec cc;   // simple-coroot coordinates of alpha^vee
    Vec fc;   // fundamental-coweight coordinates of alpha^vee (= A * cc)
    bool pos = false;
    int neg = -1;    // index of -alpha
    int comp = -1;   // component of the Dynkin diagram
    long long len2;  // squared length marker (symmetrizer-normalized); equal iff W-conjugate within component type
};

class RootDatum {
  public:
    // type: component label ("A1","A2","A3","A4","B2","G2","D4"), repeated h times.
    // sigma: permutation of the n = h*rank simple-root indices (must preserve Cartan).
    RootDatum(const std::string& type, int h, const std::vector<int>& sigma);

    int rank() const { return n_; }
    int num_components() const { return h_; }
    const std::string& type() const { return type_; }
    const Mat& cartan() const { return A_; }
    const std::vector<int>& sigma_perm() const { return sigma_; }
    int sigma_order() const { return sigma_order_; }
    bool sigma_transitive_on_components() const;

    // --- roots ---
    int num_roots() const { return (int)roots_.size(); }
    const RootInfo& root(int r) const { return roots_[r]; }
    const std::vector<int>& positive_roots() const { return pos_; }
    int root_index(const Vec& rc) const;           // -1 if not a root
    int simple_root(int i) const { return simple_[i]; }
    int negate_root(int r) const { return roots_[r].neg; }
    int highest_root(int comp) const { return highest_[comp]; }
    int component_of_node(int i) const { return comp_of_node_[i]; }

    long long pairing(int r, const Vec& mu) const;        // <alpha_r, mu>
    Rat pairing(int r, const RatVec& mu) const;
    long long pairing_rr(int r, int s) const;             // <alpha_r, alpha_s^vee>

    // --- sigma action ---
    Vec sigma_co(const Vec& mu, int power = 1) const;     // coords permute
    RatVec sigma_co(const RatVec& mu, int power = 1) const;
    int sigma_root(int r, int power = 1) const;
    Weyl sigma_weyl(const Weyl& w, int power = 1) const;
    std::vector<int> sigma_orbit_root(int r) const;       // orbit of alpha_r, in sigma-power order
    RatVec diamond(const Vec& lam) const;                 // (1/N) sum sigma^i(lam)

    // --- Weyl group ---
    Vec sref_co(int j, const Vec& mu) const;              // s_j on coweights
    Weyl canonical_weyl(const std::vector<int>& word) const;
    Weyl weyl_mul(const Weyl& a, const Weyl& b) const;
    Weyl weyl_inverse(const Weyl& a) const;
    Vec weyl_act(const Weyl& w, const Vec& mu) const;
    RatVec weyl_act(const Weyl& w, const RatVec& mu) const;
    int weyl_act_root(const Weyl& w, int r) const;
    const std::vector<Weyl>& weyl_elements() const { return weyl_all_; }        // full W0
    std::vector<Weyl> weyl_elements(const std::vector<int>& J) const;           // W_J
    Weyl longest_element(const std::vector<int>& J) const;

    // --- orders and representatives ---
    // Minimal w in W_J with w(mu) J-dominant; returns (mu_bar, w).
    std::pair<Vec, Weyl> dominant_rep(const Vec& mu, const std::vector<int>& J) const;
    std::pair<RatVec, Weyl> dominant_rep(const RatVec& mu, const std::vector<int>& J) const;
    Vec dominant(const Vec& mu) const { return dominant_rep(mu, all_nodes()).first; }
    RatVec dominant(const RatVec& mu) const { return dominant_rep(mu, all_nodes()).first; }

    bool leq_J(const Vec& mu, const Vec& lam, const std::vector<int>& J) const;      // lam-mu in N*Pi_J^vee
    bool preceq_J(const Vec& mu, const Vec& lam, const std::vector<int>& J) const;   // on J-dominant reps
    bool leq(const Vec& mu, const Vec& lam) const { return leq_J(mu, lam, all_nodes()); }
    bool preceq(const Vec& mu, const Vec& lam) const { return preceq_J(mu, lam, all_nodes()); }
    bool is_dominant(const Vec& mu, const std::vector<int>& J) const;
    bool is_weakly_dominant(const Vec& mu) const;        // <alpha,mu> >= -1 on Phi+
    bool is_minuscule(const Vec& mu, const std::vector<int>& J) const;  // |<alpha,mu>| <= 1 on Phi_J

    // Unique J-dominant J-minuscule representative of mu's class mod Z*Phi_J^vee.
    Vec minuscule_rep(const Vec& mu, const std::vector<int>& J) const;

    // --- lattices ---
    Vec coroot_co(int r) const { return roots_[r].fc; }   // alpha_r^vee in coweight coords
    Mat coroot_lattice(const std::vector<int>& J) const;  // columns = alpha_j^vee, j in J
    Mat sigma_matrix() const;                             // permutation matrix on coweight coords
    std::vector<int> all_nodes() const;
    std::vector<int> roots_in_span(const std::vector<int>& J) const;  // Phi_J as root indices
    bool simply_laced() const;

    long long two_rho_pairing(const Vec& mu) const;       // <2rho, mu>
    Rat two_rho_pairing(const RatVec& mu) const;

  private:
    void build_roots();
    void build_weyl();

    std::string type_;
    int h_ = 1, n_ = 0, comp_rank_ = 0;
    Mat A_;
    std::vector<int> sigma_, sigma_inv_;
    int sigma_order_ = 1;
    std::vector<RootInfo> roots_;
    std::map<Vec, int> root_idx_;
    std::vector<int> pos_, simple_, highest_, comp_of_node_;
    std::vector<std::vector<int>> sref_root_;   // sref_root_[j][r]
    std::vector<int> sigma_root_;
    std::vector<Weyl> weyl_all_;
    Vec two_rho_;                               // two_rho_[i] = <2rho, .> weight on coordinate i
    std::vector<long long> symmetrizer_;
};

}  // namespace adlv
