#include "hilbtaut/ringmodel.hpp"

#include <doctest.h>

#include <random>

using namespace hilbtaut;

TEST_CASE("truncated polynomial models") {
    CHECK(truncated_poly_model(0).dim() == 1);
    CHECK(truncated_poly_model(2).dim() == 6);
    CHECK_THROWS_AS(truncated_poly_model(13), std::invalid_argument);
    const RingModel r = truncated_poly_model(1);
    // basis: 1, x, y; x*y overflows
    CHECK(r.mul(1, 2).empty());
    CHECK(r.mul(0, 2).size() == 1);
    r.validate();
    CHECK(r.internal_dims() == (GradedDim{{0, 1}, {1, 2}}));
}

TEST_CASE("rank and kernel") {
    QMatrix id = QMatrix::identity(3);
    RankKernel rk = rank_kernel(id);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.empty());

    QMatrix zero(2, 3);
    rk = rank_kernel(zero);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 3);

    QMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    CHECK(rk.kernel.size() == 1);
    QVec img = m.apply(rk.kernel[0]);
    CHECK(img[0] == 0);
    CHECK(img[1] == 0);
}

TEST_CASE("rank agrees under permuted pivoting") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> sz(1, 20), val(-3, 3);
    for (int c = 0; c < 100; ++c) {
        int rows = sz(rng), cols = sz(rng);
        QMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = val(rng);
        std::vector<int> order(cols);
        for (int i = 0; i < cols; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        RankKernel a = rank_kernel(m);
        RankKernel b = rank_kernel_permuted(m, order);
        CHECK(a.rank == b.rank);
        CHECK(a.rank + static_cast<int>(a.kernel.size()) == cols);
        for (const auto& v : b.kernel)
            for (const auto& x : m.apply(v)) CHECK(x == 0);
    }
}

TEST_CASE("p2 preset") {
    SurfaceData s = preset_p2(1, 0);
    CHECK(s.h_L == GradedDim::point(0, 3));
    CHECK(s.h_L2 == GradedDim::point(0, 6));
    CHECK(s.h_O == GradedDim::point(0, 1));
    CHECK(s.has_pairings());
    s.pair_L2A_A->validate_degrees();
    CHECK_THROWS_AS(preset_p2(-1, 0), ConfigError);
    // h^0(L^l K^{-q/2}) = h^0(O(l dL - 3(-q/2))): K is O(-3), exponent -q/2 >= 0
    CHECK(preset_p2(1, 0).h_KL(2, -2).is_zero());  // O(-1) has no sections
    CHECK(preset_p2(1, 0).h_KL(2, 0) == GradedDim::point(0, 6));
    CHECK(preset_p2(2, 0).h_KL(2, -2) == GradedDim::point(0, 3));  // O(1)
}

TEST_CASE("affine preset") {
    SurfaceData s = preset_affine(1);
    CHECK(s.internal_grading);
    CHECK(s.h_O == (GradedDim{{0, 1}, {1, 2}}));
    CHECK(s.h_O.total_dim() == 3);
    CHECK(s.h_L == s.h_O);
    CHECK(s.affine_ring.has_value());
}

TEST_CASE("formal preset echoes inputs") {
    GradedDim hO{{0, 1}, {1, 2}, {2, 1}};
    SurfaceData s =
        preset_formal(hO, GradedDim{{0, 2}}, GradedDim{{0, 3}}, GradedDim{{0, 1}},
                      GradedDim{{0, 2}}, GradedDim{{0, 3}}, GradedDim{{0, 4}});
    CHECK(s.h_O == hO);
    CHECK(s.h_L2A2 == GradedDim::point(0, 4));
    CHECK_FALSE(s.has_pairings());
}

TEST_CASE("surface JSON round trip") {
    SurfaceData s = preset_p2(1, 1);
    std::string text = surface_to_json(s);
    SurfaceData back = surface_from_json(text);
    CHECK(back.h_O == s.h_O);
    CHECK(back.h_L == s.h_L);
    CHECK(back.h_L2 == s.h_L2);
    CHECK(back.h_A == s.h_A);
    CHECK(back.h_LA == s.h_LA);
    CHECK(back.h_L2A == s.h_L2A);
    CHECK(back.h_L2A2 == s.h_L2A2);
    CHECK(back.has_pairings());
    // tables survive the trip
    for (int i = 0; i < s.pair_LA_LA->a.dim(); ++i)
        for (int j = 0; j < s.pair_LA_LA->b.dim(); ++j) {
            auto norm = [](std::vector<std::pair<int, Rat>> v) {
                std::sort(v.begin(), v.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                return v;
            };
            CHECK(norm(s.pair_LA_LA->table[i][j]) == norm(back.pair_LA_LA->table[i][j]));
        }
    CHECK_THROWS_AS(surface_from_json("{ not json"), ConfigError);
    CHECK_THROWS_AS(surface_from_json("{\"h_O\": {\"0\": -1}}"), ConfigError);
}
