#pragma once

#include "hilbtaut/matrix.hpp"
#include "hilbtaut/perm.hpp"
#include "hilbtaut/symrep.hpp"

#include <string>
#include <vector>

namespace hilbtaut {

// Lambda^q(C^2 (x) rho_p) on an explicit wedge-monomial basis. The
// underlying space W has ordered basis (u f_1, v f_1, ..., u f_{p-1},
// v f_{p-1}) with f_a the image of e_a - e_p in rho_p; wedge monomials are
// subsets of W in colex order.
class WedgeSpace {
public:
    WedgeSpace(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int dim() const { return static_cast<int>(monomials_.size()); }
    const std::vector<Subset>& monomials() const { return monomials_; }

    // Matrix of Lambda^q(id_{C^2} (x) rho_p(beta)) for beta in S_p.
    QMatrix action(const Perm& beta) const;

    // gamma: Lambda^q(C^2 (x) rho_p(pos)) -> Lambda^q(C^2 (x) rho_{p+1}),
    // the inclusion rho_p(pos) in rho_{p+1} for the standard representation
    // missing index pos (0-based position of the new letter). Columns are
    // indexed by this space's monomials, rows by WedgeSpace(p+1, q).
    QMatrix gamma_matrix(int pos) const;

private:
    int p_, q_;
    std::vector<Subset> monomials_;

    // rho_p(beta) on the f-basis, then doubled by C^2.
    QMatrix w_action(const Perm& beta) const;
};

// Character of Lambda^q(C^2 (x) rho_l) at class mu (0 outside 0 <= q <= 2(l-1)).
Int tor_character(int l, int q, const Partition& mu);

// Invariants of the pure multitor: 1 exactly for even q in [0, 2(l-1)];
// the invariant line is (Lambda^2 N*)^{(x) q/2} (x) L_Y^{(x) l}.
struct TorInvariants {
    Int dim = 0;
    std::string line_label;
};
TorInvariants tor_invariants(int l, int q);

// Brute-force oracle: homology of the l-fold tensor power of the Koszul
// complex of (x,y) over C[x,y], sliced by the degree-preserving grading
// (Koszul generators weighted 1) and summed over slices 0..window.
// Exact above window >= 2(l-1); the l = 1, 2 cases are exact from
// window >= l already.
Int koszul_tor_oracle(int l, int q, int window);
inline int koszul_exact_window(int l) { return l <= 1 ? 1 : 2 * (l - 1); }

// Verdict of corollary-level inclusion checks: the summed map
// sum_i theta_i gamma on the invariant line of Lambda^q(C^2 (x) rho_l(l+1))
// is nonzero into Lambda^q(C^2 (x) rho_{l+1}) (hence iso of lines).
bool gamma_inclusion_invariants(int l, int q);

// omega = sum_i u e_i ^ v e_i in Lambda^2(V (x) R_k): the image of
// omega^l/(l+1)! in Lambda^{2l}(V (x) rho_k) is nonzero for 1 <= l <= k-1.
bool omega_power_nonzero(int k, int l);

// Partition S_0,...,S_h of {0..l-1}; block 0 carries the restricted factor.
struct MixedPartition {
    std::vector<std::vector<int>> blocks;  // each sorted ascending
    int l() const;
    void validate() const;
};

// Action data of tau on a mixed multitor: the increasing-bijection factors
// beta_i(tau) (as permutations of {0..|S_i|-1}), the image partition, and
// the global sign sgn(beta_0(tau)) the spectral sequence adds on top.
struct MixedAction {
    int sign = 1;
    MixedPartition image;
    std::vector<Perm> betas;
};
MixedAction mixed_perm_action(const MixedPartition& part, const Perm& tau);

// Spectral-sequence correction: hat-tau = (-1)^{i_j i_{j+1}} tilde-tau.
int ss_sign_correction(int deg_i, int deg_next);

}  // namespace hilbtaut
