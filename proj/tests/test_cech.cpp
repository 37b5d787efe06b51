#include "hilbtaut/cech.hpp"

#include <doctest.h>

using namespace hilbtaut;

TEST_CASE("epsilon signs") {
    // the paper's 1-based example i=5, J={2,5} reads i=4, J={1,4} here
    CHECK(epsilon_sign(4, subset_of({1, 4})) == -1);
    CHECK(epsilon_sign(1, subset_of({1, 4})) == 1);
    CHECK(epsilon_sign(0, subset_of({0, 3, 5})) == 1);
    CHECK(epsilon_sign(5, subset_of({0, 3, 5})) == 1);
    CHECK(epsilon_sign(3, subset_of({0, 3, 5})) == -1);
    CHECK_THROWS_AS(epsilon_sign(2, subset_of({1, 4})), std::invalid_argument);
}

TEST_CASE("equivariant signs") {
    Perm id = perm_identity(4);
    CHECK(equivariant_sign(id, subset_of({1, 2})) == 1);
    Perm swap01 = {1, 0, 2, 3};
    CHECK(equivariant_sign(swap01, subset_of({0, 1})) == -1);
    // sigma fixing J pointwise
    Perm swap23 = {0, 1, 3, 2};
    CHECK(equivariant_sign(swap23, subset_of({0, 1})) == 1);
}

TEST_CASE("differential matrix shapes and values") {
    IMat d = differential_matrix(2, 0);
    REQUIRE(d.rows == 1);
    REQUIRE(d.cols == 2);
    // colex columns ({0}, {1}); entries epsilon_{1,J} = -1, epsilon_{0,J} = +1
    CHECK(d.at(0, 0) == -1);
    CHECK(d.at(0, 1) == 1);
    IMat d3 = differential_matrix(3, 0);
    for (int r = 0; r < d3.rows; ++r) {
        int nonzero = 0, sum = 0;
        for (int c = 0; c < d3.cols; ++c) {
            if (d3.at(r, c)) ++nonzero;
            sum += static_cast<int>(d3.at(r, c));
        }
        CHECK(nonzero == 2);
        CHECK(sum == 0);  // two entries of opposite sign
    }
    CHECK_THROWS_AS(differential_matrix(3, 2), std::invalid_argument);
}

TEST_CASE("d squared vanishes up to n=6") {
    for (int n = 3; n <= 6; ++n)
        for (int p = 0; p + 3 <= n; ++p)
            CHECK((differential_matrix(n, p + 1) * differential_matrix(n, p)).is_zero());
}

TEST_CASE("action is an equivariant homomorphism") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<Perm> gens;
        for (int i = 0; i + 1 < n; ++i) {
            Perm s = perm_identity(n);
            std::swap(s[i], s[i + 1]);
            gens.push_back(s);
        }
        for (int p = 0; p + 2 <= n; ++p) {
            IMat d = differential_matrix(n, p);
            for (const auto& s : gens)
                CHECK(action_matrix(n, s, p + 1) * d == d * action_matrix(n, s, p));
        }
        for (const auto& s : gens)
            for (const auto& t : gens)
                CHECK(action_matrix(n, s, 1) * action_matrix(n, t, 1) ==
                      action_matrix(n, perm_compose(s, t), 1));
        CHECK(action_matrix(n, perm_identity(n), 0) == action_matrix(n, perm_identity(n), 0));
    }
}

TEST_CASE("section characters") {
    const RingModel ring = truncated_poly_model(1);
    GradedDim L = ring.internal_dims();
    int n = 3;
    // |I| = 1: identity character = dim L * (dim ring)^{n-1}
    GradedTrace tr = section_character(n, subset_of({0}), ring, L, perm_identity(n));
    Int total = 0;
    for (const auto& [d, m] : tr) total += m;
    CHECK(total == L.total_dim() * ring.dim() * ring.dim());
    // |I| = n: transposition acts through the alternant
    Perm swap01 = {1, 0, 2};
    GradedTrace tr2 = section_character(n, subset_of({0, 1, 2}), ring, L, swap01);
    Int total2 = 0;
    for (const auto& [d, m] : tr2) total2 += m;
    CHECK(total2 == -L.total_dim());
    CHECK_THROWS_AS(section_character(n, subset_of({0, 1}), ring, L, Perm{0, 2, 1}),
                    std::invalid_argument);
}

TEST_CASE("invariants of C^p vanish in positive degree") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 0; d <= 2; ++d) {
            const RingModel ring = truncated_poly_model(d);
            GradedDim L = ring.internal_dims();
            for (int p = 1; p <= n - 1; ++p) {
                CHECK(invariants_of_term(n, p, ring, L).is_zero());
                CHECK(invariants_of_term_direct(n, p, ring, L).is_zero());
            }
            GradedDim p0 = invariants_of_term(n, 0, ring, L);
            CHECK(p0 == invariants_of_term_direct(n, 0, ring, L));
            CHECK(p0 == tensor(L, sym_power_plain(ring.internal_dims(), n - 1)));
        }
    // the spec's worked value: n=2, p=0, affine(1), L trivial: 3 * dim S^1 = 9
    const RingModel ring = truncated_poly_model(1);
    CHECK(invariants_of_term(2, 0, ring, ring.internal_dims()).total_dim() == 9);
}
