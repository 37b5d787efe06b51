#pragma once

#include "hilbtaut/grading.hpp"
#include "hilbtaut/matrix.hpp"
#include "hilbtaut/perm.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <vector>

namespace hilbtaut {

// Element of S_n (or S_n x S_k when the second factor is nonempty).
struct GroupElem {
    Perm g;
    Perm h;  // empty for a plain symmetric group

    bool operator==(const GroupElem& o) const { return g == o.g && h == o.h; }
    bool operator<(const GroupElem& o) const { return std::tie(g, h) < std::tie(o.g, o.h); }
};

GroupElem elem_compose(const GroupElem& a, const GroupElem& b);
GroupElem elem_inverse(const GroupElem& a);

// S_n or S_n x S_k, elements enumerated on demand.
class SymProduct {
public:
    SymProduct() = default;
    explicit SymProduct(int n, int k = 0) : n_(n), k_(k) {}
    int n() const { return n_; }
    int k() const { return k_; }
    Int order() const;
    GroupElem identity() const;
    std::vector<GroupElem> generators() const;  // adjacent transpositions per factor
    void for_each(const std::function<void(const GroupElem&)>& fn) const;

private:
    int n_ = 0, k_ = 0;
};

struct GAction {
    SymProduct group;
    int count = 0;  // indices 0..count-1
    std::function<int(const GroupElem&, int)> apply;
};

std::vector<std::vector<int>> orbits(const GAction& action);
Int stabilizer_order(const GAction& action, int index);
std::vector<GroupElem> stabilizer_elements(const GAction& action, int index);

// Closed-form stabilizer of a subset under the S_n action: generators of
// S(I) x S(complement) (adjacent transpositions within each part).
std::vector<Perm> subset_stabilizer_generators(int n, Subset I);
// One group element per orbit member, mapping `index` onto it (BFS over
// generators, deterministic).
std::map<int, GroupElem> orbit_transversal(const GAction& action, int index);

// Module decomposed along the action: per-index component with explicit
// basis, and for every group element a block map M_i -> M_{g(i)}.
struct BlockMap {
    int target = -1;
    SparseMat mat;
};

struct BlockModule {
    GAction action;
    std::vector<int> dims;
    std::vector<std::vector<int>> degrees;  // optional; empty => all degree 0
    std::function<BlockMap(const GroupElem&, int)> map_of;

    int degree_of(int block, int i) const {
        return degrees.empty() || degrees[block].empty() ? 0 : degrees[block][i];
    }
    // Compatibility spot-checks: identity acts as identity, composition law
    // on sampled generator pairs. Throws PropertyFalsified on violation.
    void validate() const;
};

// Graded invariant dimensions: sum over orbits of the stabilizer-character
// average on one block per orbit (Danila's lemma).
GradedDim invariants_danila(const BlockModule& m);

// Oracle: the averaging projector (1/|G|) sum_g g over the full module,
// group enumerated fully (order guard). Rank via exact elimination when the
// module is small, via the trace of the idempotent otherwise.
GradedDim invariants_direct(const BlockModule& m, Int order_guard = 5040);

// Deterministic basis of M_{block}^{Stab(block)}, homogeneous vectors,
// reduced echelon per degree stratum.
std::vector<QVec> invariant_block_basis(const BlockModule& m, int block);

// Equivariant morphism given blockwise: components(i) lists the nonzero
// f_{i,j}.
struct MorphismFamily {
    std::function<std::vector<BlockMap>(int)> components;
};

// Validates f_{g(i),g(j)} o g = g o f_{i,j} on all generators and blocks.
void validate_equivariance(const MorphismFamily& f, const BlockModule& src, const BlockModule& tgt);

// Matrix of f^G : M_{i0}^{Stab(i0)} -> N_{j0}^{Stab(j0)} in the given
// invariant bases, via f^G(u) = sum over cosets [g] of f_{g(i0),j0}(g u).
QMatrix morphism_invariants_block(const MorphismFamily& f, const BlockModule& src,
                                  const BlockModule& tgt, int i0, int j0,
                                  const std::vector<QVec>& src_basis,
                                  const std::vector<QVec>& tgt_basis);

// Concatenated invariant data over all orbits (min representatives in
// ascending order).
struct InvariantSpace {
    std::vector<int> reps;
    std::vector<std::vector<QVec>> bases;
    std::vector<int> vec_degrees;  // degree per concatenated basis vector
    int total_dim() const;
    GradedDim dims() const;
};
InvariantSpace invariant_space(const BlockModule& m);

QMatrix morphism_invariants(const MorphismFamily& f, const BlockModule& src,
                            const BlockModule& tgt, const InvariantSpace& s,
                            const InvariantSpace& t);

// Lemma "DMS": when Stab(j0) = P x Q with Q acting trivially on N_{j0},
// f_{g(i0),j0} = 0 off Stab(j0)/Stab(i0), and the Stab(i0)-invariants of
// M_{i0} already Stab(i0) n Stab(j0)-invariant, the invariant matrix equals
// |Q| times the P-invariant matrix of the restricted family. Hypotheses are
// validated; violations throw naming the failed clause.
QMatrix morphism_invariants_factored(const MorphismFamily& f, const BlockModule& src,
                                     const BlockModule& tgt, int i0, int j0,
                                     const std::vector<GroupElem>& P,
                                     const std::vector<GroupElem>& Q,
                                     const std::vector<QVec>& src_basis,
                                     const std::vector<QVec>& tgt_basis);

}  // namespace hilbtaut
