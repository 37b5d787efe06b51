#pragma once

#include "hilbtaut/grading.hpp"
#include "hilbtaut/matrix.hpp"
#include "hilbtaut/ringmodel.hpp"

#include <string>

namespace hilbtaut {

struct HilbertCohomologyResult {
    std::string kind;        // taut | tensor2 | sym2 | ext2 | extk | tensor2_twisted
    GradedDim dims;
    std::string provenance;  // which formula, which inputs
    // the tensor-square split
    GradedDim sym2, ext2;
    // interval mode (tensor2_twisted without pairing tables)
    bool exact = true;
    GradedDim lower, upper;
};

// H*(X^[n], L^[n]) = H*(L) (x) S^{n-1} H*(O).
GradedDim taut_cohomology(int n, const SurfaceData& data);

// J = ker(S^{n-1}H*(O) -> S^{n-2}H*(O)), computed as the graded difference
// (valid because the restriction D is surjective); negative entries fail.
GradedDim J_dims(int n, const GradedDim& h_O, bool internal = false);

// Explicit matrix of D: H*(F) (x) S^k H*(O_model) -> H*(F) (x) S^{k-1},
// alpha (x) u_1...u_k -> (1/k) sum_i (koszul sign) alpha u_i (x) rest.
// `ring` provides the H*(O)-model basis and products; `action` the module
// structure on F.
struct DOperator {
    QMatrix matrix;
    std::vector<int> src_degrees, dst_degrees;
};
DOperator D_matrix(int k, const RingModel& ring, const PairedSpace& F);

// Exact matrix identity prod_{j=0}^{k-1} (Psi - (k-j)/k) = 0 for
// Psi = D o sigma (sigma inserts the unit).
bool psi_annihilator_check(int k, const RingModel& ring, const PairedSpace& F);

// The canonical F = ring module over itself (used by the affine checks).
PairedSpace ring_as_module(const RingModel& ring);

// H*(L^[n] (x) L^[n]) with its S_2-split.
HilbertCohomologyResult tensor_square_cohomology(int n, const SurfaceData& data);

// H*(Lambda^k L^[n] (x) D_A) = Lambda^k H*(L (x) A) (x) S^{n-k} H*(A).
GradedDim ext_power_cohomology(int n, int k, const SurfaceData& data);

// H*(L^[n] (x) L^[n] (x) D_A) by splicing the long exact sequence; exact
// when pairing tables are present, otherwise the [lower, upper] interval.
HilbertCohomologyResult les_twisted(int n, const SurfaceData& data);

// Section-level oracle behind the exterior-power formula: invariants of
// Lambda^k C^0_L over the affine model, by Danila reduction (blocks over
// k-subsets with the alternating sign structure).
GradedDim lambda_k_c0_invariants(int n, int k, const SurfaceData& data);

}  // namespace hilbtaut
