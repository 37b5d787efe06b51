#pragma once

#include "hilbtaut/grading.hpp"
#include "hilbtaut/perm.hpp"
#include "hilbtaut/ringmodel.hpp"

#include <map>
#include <vector>

namespace hilbtaut {

// Combinatorial model of the equivariant complex C*_L: terms indexed by
// nonempty multi-indexes I of {1..n} (here 0-based bitmasks), signed
// differential and S_n-linearization.

// epsilon_{i,J} = (-1)^{#{h in J : h < i}}; i must belong to J.
int epsilon_sign(int i, Subset J);

// Signature of the permutation sorting (sigma(j_1), ..., sigma(j_m)) where
// j_1 < ... < j_m enumerates sigma^{-1}(J): the unique sign convention
// making the differential equivariant (enforced by the property tests).
int equivariant_sign(const Perm& sigma, Subset J);

// Small integer matrix (entries fit comfortably in Int).
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;
    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    IMat operator*(const IMat& o) const;
    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const;
};

// Rows indexed by (p+2)-subsets, columns by (p+1)-subsets, colex order;
// entry (J, I) = epsilon_{i,J} when I = J \ {i}.
IMat differential_matrix(int n, int p);

// Signed permutation matrix of sigma on term p: (sigma.x)_J =
// epsilon_{sigma,J} x_{sigma^{-1}(J)}.
IMat action_matrix(int n, const Perm& sigma, int p);

// Signed graded trace: degree -> integer (characters may be negative).
using GradedTrace = std::map<int, Int>;

// Stab(I)-character of H^0(U^n, L_I) = H^0(U,L) (x) H^0(U,O)^{(x)|Ibar|}
// (x) epsilon_{|I|}, graded by internal degree. sigma must stabilize I.
GradedTrace section_character(int n, Subset I, const RingModel& ring, const GradedDim& L_dims,
                              const Perm& sigma);

// Invariants of (C^p_L) over the affine model, by Danila reduction
// (stabilizer character average on one orbit block).
GradedDim invariants_of_term(int n, int p, const RingModel& ring, const GradedDim& L_dims);

// Same by direct projector averaging over all of S_n (class sums).
GradedDim invariants_of_term_direct(int n, int p, const RingModel& ring, const GradedDim& L_dims);

}  // namespace hilbtaut
