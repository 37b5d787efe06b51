#include "hilbtaut/specseq.hpp"

#include "hilbtaut/cohomology.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hilbtaut;

TEST_CASE("index map enumeration") {
    CHECK(enumerate_index_maps(3, 2, 0, false).size() == 9);
    CHECK(enumerate_index_maps(3, 2, 0, true).size() == 6);
    CHECK(enumerate_index_maps(3, 2, 1, false).size() == 18);
    CHECK(enumerate_index_maps(3, 2, 3, false).empty());
    CHECK(enumerate_index_maps(4, 3, 4, true).empty());
    // derived data
    IndexMap a;
    a.n = 4;
    a.k = 3;
    a.a = {subset_of({0, 1}), subset_of({0}), subset_of({2})};
    CHECK(a.l() == 1);
    CHECK(a.I0() == subset_of({0, 1}));
    CHECK(a.Jset() == subset_of({0, 2}));
    CHECK(a.t() == 1);
    CHECK(a.S0() == std::vector<int>{0});
    CHECK(a.restricted());
}

TEST_CASE("orbit classification") {
    IndexMap bad;
    bad.n = 3;
    bad.k = 2;
    bad.a = {subset_of({0}), subset_of({0})};
    CHECK_FALSE(classify_orbit(bad).relevant);

    IndexMap t1;
    t1.n = 3;
    t1.k = 2;
    t1.a = {subset_of({0, 1}), subset_of({0})};
    auto c = classify_orbit(t1);
    CHECK(c.relevant);
    CHECK(c.t == 1);

    IndexMap t0;
    t0.n = 3;
    t0.k = 2;
    t0.a = {subset_of({0, 1}), subset_of({0, 1})};
    c = classify_orbit(t0);
    CHECK(c.relevant);
    CHECK(c.t == 0);
}

TEST_CASE("stabilizers") {
    IndexMap a;
    a.n = 3;
    a.k = 2;
    a.a = {subset_of({0, 1}), subset_of({0, 1})};
    StabilizerInfo info = stabilizer_of(a);
    CHECK(info.order == 4);
    CHECK(factorial(3) * factorial(2) / info.order == 3);

    // orbit-stabilizer consistency across n <= 4, k <= 3
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int p = 0; p <= k; ++p) {
                auto maps = enumerate_index_maps(n, k, p, true);
                std::map<int, Int> by_t_count, by_t_orbits;
                for (const auto& am : maps) by_t_count[am.t()]++;
                std::set<int> seen;
                for (const auto& am : maps) {
                    if (seen.count(am.t())) continue;
                    seen.insert(am.t());
                    StabilizerInfo s = stabilizer_of(am);
                    by_t_orbits[am.t()] += factorial(n) * factorial(k) / s.order;
                }
                CHECK(by_t_count == by_t_orbits);
            }

    IndexMap irr;
    irr.n = 2;
    irr.k = 2;
    irr.a = {subset_of({0}), subset_of({0})};
    CHECK_THROWS_AS(stabilizer_of(irr), std::invalid_argument);
}

TEST_CASE("F terms") {
    SurfaceData sd = preset_affine(1);
    GradedDim R = sd.affine_ring->internal_dims();
    CHECK(F_dim(0, 0, 4, 2, sd) ==
          tensor(ext_power_plain(R, 2), sym_power_plain(R, 2)));
    CHECK(F_dim(3, 0, 4, 2, sd).is_zero());  // l > k
    CHECK(F_dim(1, 0, 2, 2, sd).is_zero());  // symmetric exponent n-k+l-2 < 0
    CHECK(F_dim(2, 0, 2, 2, sd) == tensor(R, sym_power_plain(R, 0)));
    CHECK_THROWS_AS(F_dim(1, -1, 4, 2, sd), std::invalid_argument);
    // l = k, q = 0, n = k+1: h0(L^k) x Lambda^0 x S^{k-1}
    for (int k = 1; k <= 3; ++k)
        CHECK(F_dim(k, 0, k + 1, k, sd) == tensor(R, sym_power_plain(R, k - 1)));
}

TEST_CASE("invariant terms against the classification") {
    SurfaceData sd = preset_affine(1);
    // p odd, t=1, q=0: F^{2,0}
    IndexMap a;
    a.n = 3;
    a.k = 2;
    a.a = {subset_of({0, 1}), subset_of({0})};
    CHECK(invariant_term(a, 0, sd) == F_dim(2, 0, 3, 2, sd));
    CHECK(invariant_term(a, -1, sd).is_zero());  // odd q
    // p even, t=2 vanishes (needs k = 4)
    IndexMap b;
    b.n = 3;
    b.k = 4;
    b.a = {subset_of({0, 1}), subset_of({0, 1}), subset_of({0}), subset_of({1})};
    CHECK(b.l() == 2);
    CHECK(b.t() == 2);
    CHECK(invariant_term(b, 0, sd).is_zero());
    CHECK(invariant_term(b, -2, sd).is_zero());
    // p odd, t=2: F^{3,q} (k = 3)
    IndexMap c;
    c.n = 4;
    c.k = 3;
    c.a = {subset_of({0, 1}), subset_of({0}), subset_of({1})};
    CHECK(c.l() == 1);
    CHECK(c.t() == 2);
    CHECK(invariant_term(c, 0, sd) == F_dim(3, 0, 4, 3, sd));
    // q below the admissible window vanishes
    CHECK(invariant_term(c, -2, sd).is_zero());
}

TEST_CASE("page block modules satisfy the action laws") {
    SurfaceData sd = preset_affine(1);
    // identity acts as identity and generator compositions hold on every
    // block: this pins the sign conventions (hat-corrections, eps_k twist,
    // orientation signs) as an actual group action
    for (int q : {0, -2}) {
        for (int p = 0; p <= 2; ++p) build_page_blocks(3, 2, p, q, sd).module.validate();
    }
    for (int p = 0; p <= 3; ++p) build_page_blocks(3, 3, p, 0, sd).module.validate();
}

TEST_CASE("assembled pages match the degeneration shape (k=2)") {
    SurfaceData sd = preset_affine(1);
    for (int n = 2; n <= 3; ++n)
        for (int q = -4; q <= 0; q += 2) {
            PageComplex page = assemble_page(n, 2, q, sd);
            auto expected = expected_page_shape(n, 2, q, sd);
            for (int p = 0; p <= 2; ++p) CHECK(page.terms[p] == expected[p]);
            CHECK(page.d_zero_out_of_odd);
            for (const auto& alpha : page.alphas) {
                CHECK(alpha.is_iso);
                CHECK(alpha.dms_agrees);
            }
        }
    // q = -1 page vanishes entirely
    PageComplex odd = assemble_page(3, 2, -1, sd);
    for (const auto& t : odd.terms) CHECK(t.is_zero());
}

TEST_CASE("page homology computes the direct image term") {
    SurfaceData sd = preset_affine(1);
    for (int n = 2; n <= 3; ++n)
        for (int k = 2; k <= std::min(n, 3); ++k) {
            PageComplex page = assemble_page(n, k, 0, sd);
            // H^0 of the twisted page is Lambda^k H^0(L) (x) S^{n-k} H^0(O)
            CHECK(page_homology(page, 0) == F_dim(0, 0, n, k, sd));
            for (int p = 1; p <= k; ++p) CHECK(page_homology(page, p).is_zero());
        }
}

TEST_CASE("k=1 page reproduces the Brion-Danila structure") {
    SurfaceData sd = preset_affine(1);
    for (int n = 2; n <= 4; ++n) {
        PageComplex page = assemble_page(n, 1, 0, sd);
        GradedDim R = sd.affine_ring->internal_dims();
        CHECK(page.terms[0] == tensor(R, sym_power_plain(R, n - 1)));
        CHECK(page.terms[1].is_zero());
    }
}

TEST_CASE("k=2 exact-sequence oracle") {
    // n=2, affine(0): source 2-dimensional, target 1-dimensional, kernel 1
    SurfaceData sd0 = preset_affine(0);
    bool surj = false;
    GradedDim ker = e00_infinity_k2(2, sd0, &surj);
    CHECK(surj);
    CHECK(ker == GradedDim::point(0, 1));
    for (int n = 2; n <= 3; ++n)
        for (int d = 0; d <= 1; ++d) {
            SurfaceData sd = preset_affine(d);
            bool s = false;
            GradedDim kernel = e00_infinity_k2(n, sd, &s);
            CHECK(s);
            CHECK(kernel == tensor_square_cohomology(n, sd).dims);
            CHECK(e2_minus1_invariants(n, sd).is_zero());
        }
}
