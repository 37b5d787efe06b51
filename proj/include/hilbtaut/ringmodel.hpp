#pragma once

#include "hilbtaut/grading.hpp"
#include "hilbtaut/matrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hilbtaut {

// Finite graded-commutative ring with explicit basis and rational structure
// constants. Cohomological degree drives the sign rule; internal degree is
// bookkeeping for section-space models (where cohomological degree is 0).
class RingModel {
public:
    struct BasisElem {
        std::string label;
        int coh_degree = 0;
        int internal_degree = 0;
    };

    RingModel() = default;
    RingModel(std::vector<BasisElem> basis, int unit_index);

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElem& basis(int i) const { return basis_[i]; }
    int unit() const { return unit_; }
    const std::vector<std::pair<int, Rat>>& mul(int i, int j) const;
    void set_mul(int i, int j, std::vector<std::pair<int, Rat>> val);

    GradedDim internal_dims() const;

    // Checks graded-commutativity on all pairs and associativity
    // (exhaustively for dim <= 30, on sampled triples otherwise).
    void validate() const;

private:
    std::vector<BasisElem> basis_;
    int unit_ = 0;
    std::vector<std::vector<std::pair<int, Rat>>> mult_;  // (i*dim+j) -> sparse product
};

// Sections of O over an affine chart, modeled as the Artinian quotient of
// C[x,y] by total degree > d. All cohomological degrees 0.
RingModel truncated_poly_model(int d);

// Bilinear pairing A x B -> C on explicit graded bases.
struct GradedBasis {
    std::vector<int> degrees;
    int dim() const { return static_cast<int>(degrees.size()); }
    GradedDim dims() const;
};

struct Pairing {
    GradedBasis a, b, c;
    // table[i][j]: expansion of a_i * b_j in the basis of c
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table;

    void validate_degrees() const;
};

// A graded space with a module action of a ring model on it: the shape
// needed by the D / Psi operators.
struct PairedSpace {
    GradedBasis space;
    Pairing action;  // space x ring -> space (a = c = space, b = ring basis)
};

// Graded dimensions of the seven sheaves the closed formulas consume, plus
// the optional data only desk-scale verification needs.
struct SurfaceData {
    std::string name;
    bool internal_grading = false;  // true for affine section models

    GradedDim h_O, h_L, h_L2, h_A, h_LA, h_L2A, h_L2A2;

    // h^0(K_X^{(-q/2)} (x) L^l); only consulted by the F-terms. Affine and
    // p2 presets populate it; formal surfaces may leave it empty.
    std::function<GradedDim(int l, int q)> h_KL;

    std::optional<Pairing> pair_L2A_A;  // H(L^2 A) x H(A) -> H(L^2 A^2)
    std::optional<Pairing> pair_LA_LA;  // H(L A) x H(L A) -> H(L^2 A^2)

    std::optional<RingModel> affine_ring;

    bool has_pairings() const { return pair_L2A_A.has_value() && pair_LA_LA.has_value(); }
};

// Presets. p2 requires dL, dA >= 0 (globally generated twists only, so all
// cohomology sits in degree 0 and pairings are monomial multiplication).
SurfaceData preset_p2(int dL, int dA);
SurfaceData preset_affine(int d);
SurfaceData preset_formal(GradedDim h_O, GradedDim h_L, GradedDim h_L2, GradedDim h_A,
                          GradedDim h_LA, GradedDim h_L2A, GradedDim h_L2A2);

// JSON round trip for the CLI config format (graded dims as degree->mult
// objects, pairings as (i, j, k, rational-string) quadruples).
std::string surface_to_json(const SurfaceData& s);
SurfaceData surface_from_json(const std::string& json_text);

}  // namespace hilbtaut
