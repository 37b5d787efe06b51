#include "hilbtaut/cohomology.hpp"

#include <doctest.h>

using namespace hilbtaut;

TEST_CASE("tautological cohomology") {
    CHECK(taut_cohomology(3, preset_p2(1, 0)) == GradedDim::point(0, 3));
    SurfaceData p2 = preset_p2(2, 0);
    CHECK(taut_cohomology(1, p2) == p2.h_L);
    SurfaceData f = preset_formal(GradedDim{{0, 1}, {2, 1}}, GradedDim{{0, 2}}, GradedDim{{0, 3}},
                                  GradedDim{{0, 1}}, GradedDim{{0, 2}}, GradedDim{{0, 3}},
                                  GradedDim{{0, 3}});
    CHECK(taut_cohomology(2, f) == (GradedDim{{0, 2}, {2, 2}}));
}

TEST_CASE("J dims") {
    CHECK(J_dims(2, GradedDim::point(0, 1)).is_zero());
    CHECK(J_dims(2, GradedDim{{0, 1}, {2, 1}}) == GradedDim::point(2, 1));
    CHECK(J_dims(2, GradedDim{{0, 1}, {1, 2}, {2, 1}}) == (GradedDim{{1, 2}, {2, 1}}));
}

TEST_CASE("D operator") {
    // with the one-element chart ring, D at k=1 is the action by 1
    const RingModel point_ring = truncated_poly_model(0);
    DOperator dpt = D_matrix(1, point_ring, ring_as_module(point_ring));
    CHECK(dpt.matrix == QMatrix::identity(1));

    const RingModel ring = truncated_poly_model(1);
    PairedSpace F = ring_as_module(ring);
    DOperator d1 = D_matrix(1, ring, F);
    // k=1: alpha (x) u -> alpha u, the multiplication matrix; surjective
    CHECK(d1.matrix.rows() == ring.dim());
    CHECK(d1.matrix.cols() == ring.dim() * ring.dim());
    CHECK(rank_of(d1.matrix) == ring.dim());
    CHECK(d1.matrix.at(1, 0 * 3 + 1) == 1);  // 1 * x = x

    // k=2, all even degrees: alpha (x) uv -> 1/2 (alpha u (x) v + alpha v (x) u)
    DOperator d2 = D_matrix(2, ring, F);
    CHECK(rank_of(d2.matrix) == d2.matrix.rows());  // surjective
    // entry check: alpha = 1 (index 0), tuple (x, y) = indices (1, 2)
    // image: 1/2 (x (x) y + y (x) x): coefficient 1/2 on (beta=x, tuple {y})
    // src tuple basis of size 2 over 3 ring elements: (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
    // dst tuples: (0),(1),(2)
    int src_col = 0 * 6 + 4;  // alpha=0, tuple (1,2)
    int dst_row_x_y = 1 * 3 + 2;  // beta=1 (x), tuple (2) = {y}
    int dst_row_y_x = 2 * 3 + 1;  // beta=2 (y), tuple (1) = {x}
    CHECK(d2.matrix.at(dst_row_x_y, src_col) == Rat(1, 2));
    CHECK(d2.matrix.at(dst_row_y_x, src_col) == Rat(1, 2));
}

namespace {

// Exterior algebra on two degree-1 generators: the smallest ring model with
// genuinely odd classes (abelian-surface-like H^*(O)). Basis 1, a, b, ab.
RingModel exterior_algebra_model() {
    std::vector<RingModel::BasisElem> basis = {
        {"1", 0, 0}, {"a", 1, 0}, {"b", 1, 0}, {"ab", 2, 0}};
    RingModel r(std::move(basis), 0);
    auto set = [&](int i, int j, int k, int c) {
        r.set_mul(i, j, {{k, Rat(c)}});
    };
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        if (i) set(i, 0, i, 1);
    }
    set(1, 2, 3, 1);   // a b = ab
    set(2, 1, 3, -1);  // b a = -ab
    // a^2 = b^2 = 0 and anything hitting degree > 2 vanishes: leave empty
    r.validate();
    return r;
}

}  // namespace

TEST_CASE("Psi annihilator identity") {
    for (int d = 0; d <= 2; ++d) {
        const RingModel ring = truncated_poly_model(d);
        PairedSpace F = ring_as_module(ring);
        for (int k = 1; k <= 3; ++k) CHECK(psi_annihilator_check(k, ring, F));
    }
}

TEST_CASE("Psi annihilator and D surjectivity with odd classes") {
    // the surjectivity lemma makes no evenness assumption; this drives the
    // Koszul-signed multiset bookkeeping through genuinely odd degrees
    const RingModel ext = exterior_algebra_model();
    PairedSpace F;
    F.space.degrees = {0, 1, 1, 2};
    F.action.a = F.space;
    F.action.b = F.space;
    F.action.c = F.space;
    F.action.table.assign(4, std::vector<std::vector<std::pair<int, Rat>>>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) F.action.table[i][j] = ext.mul(i, j);
    for (int k = 1; k <= 3; ++k) {
        CHECK(psi_annihilator_check(k, ext, F));
        DOperator op = D_matrix(k, ext, F);
        CHECK(rank_of(op.matrix) == op.matrix.rows());
    }
    // graded symmetric powers of the odd ring match the multiset basis size
    GradedDim h{{0, 1}, {1, 2}, {2, 1}};
    CHECK(sym_power(h, 2) == (GradedDim{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}));
}

TEST_CASE("twisted sequence over a ring with odd classes") {
    const RingModel ext = exterior_algebra_model();
    GradedDim h{{0, 1}, {1, 2}, {2, 1}};
    SurfaceData sd = preset_formal(h, h, h, h, h, h, h);
    Pairing mult;
    mult.a.degrees = {0, 1, 1, 2};
    mult.b = mult.a;
    mult.c = mult.a;
    mult.table.assign(4, std::vector<std::vector<std::pair<int, Rat>>>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mult.table[i][j] = ext.mul(i, j);
    sd.pair_L2A_A = mult;
    sd.pair_LA_LA = mult;
    for (int n = 2; n <= 3; ++n) {
        HilbertCohomologyResult les = les_twisted(n, sd);
        CHECK(les.exact);
        // m_1 alone is the restriction operator D, surjective by the lemma,
        // so the splice leaves no cokernel part: H^d = src_d - tgt_d
        GradedDim src = direct_sum(tensor(sd.h_L2A, sym_power(sd.h_A, n - 1)),
                                   tensor(tensor(sd.h_LA, sd.h_LA), sym_power(sd.h_A, n - 2)));
        GradedDim tgt = tensor(sd.h_L2A2, sym_power(sd.h_A, n - 2));
        CHECK(les.dims == subtract(src, tgt, "odd-class splice"));
    }
}

TEST_CASE("tensor square with split") {
    HilbertCohomologyResult r = tensor_square_cohomology(2, preset_p2(1, 0));
    CHECK(r.dims == GradedDim::point(0, 9));
    CHECK(r.sym2 == GradedDim::point(0, 6));
    CHECK(r.ext2 == GradedDim::point(0, 3));
    CHECK(direct_sum(r.sym2, r.ext2) == r.dims);
    // odd line bundle class: the split swaps roles
    SurfaceData odd = preset_formal(GradedDim{{0, 1}}, GradedDim{{1, 1}}, GradedDim{{2, 1}},
                                    GradedDim{{0, 1}}, GradedDim{{1, 1}}, GradedDim{{2, 1}},
                                    GradedDim{{2, 1}});
    HilbertCohomologyResult ro = tensor_square_cohomology(2, odd);
    CHECK(ro.ext2 == GradedDim::point(2, 1));  // graded Lambda^2 of one odd class
    CHECK(ro.sym2.is_zero());                  // graded Sym^2 of one odd class dies
}

TEST_CASE("exterior power cohomology") {
    CHECK(ext_power_cohomology(4, 3, preset_p2(2, 0)) == GradedDim::point(0, 20));
    SurfaceData sd = preset_p2(1, 0);
    CHECK(ext_power_cohomology(3, 0, sd) == sym_power(sd.h_A, 3));
    CHECK(ext_power_cohomology(3, 1, sd) == taut_cohomology(3, sd));
    CHECK_THROWS_AS(ext_power_cohomology(2, 3, sd), std::invalid_argument);
    CHECK(ext_power_cohomology(2, 2, sd) == tensor_square_cohomology(2, sd).ext2);
}

TEST_CASE("twisted long exact sequence") {
    for (int n = 2; n <= 3; ++n) {
        SurfaceData sd = preset_p2(1, 0);  // trivial A
        HilbertCohomologyResult les = les_twisted(n, sd);
        CHECK(les.exact);
        CHECK(les.dims == tensor_square_cohomology(n, sd).dims);
    }
    // p2(1,1), n=2: source 10*3 + 6*6 = 66, multiplication onto H^0(O(4)) = 15
    // is surjective, so the kernel is 51-dimensional in degree 0
    HilbertCohomologyResult les = les_twisted(2, preset_p2(1, 1));
    CHECK(les.exact);
    CHECK(les.dims == GradedDim::point(0, 51));
    // missing pairings: interval mode
    SurfaceData stripped = preset_p2(1, 1);
    stripped.pair_L2A_A.reset();
    stripped.pair_LA_LA.reset();
    HilbertCohomologyResult itv = les_twisted(2, stripped);
    CHECK_FALSE(itv.exact);
    CHECK(itv.lower.at(0) <= 51);
    CHECK(itv.upper.at(0) >= 51);
}

TEST_CASE("exterior cross oracle at section level") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= std::min(n, 3); ++k)
            for (int d = 0; d <= 1; ++d) {
                SurfaceData sd = preset_affine(d);
                GradedDim R = sd.affine_ring->internal_dims();
                CHECK(lambda_k_c0_invariants(n, k, sd) ==
                      tensor(ext_power_plain(R, k), sym_power_plain(R, n - k)));
            }
}
