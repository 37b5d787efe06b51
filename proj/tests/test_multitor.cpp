#include "hilbtaut/multitor.hpp"

#include <doctest.h>

using namespace hilbtaut;

TEST_CASE("tor characters") {
    for (int l = 1; l <= 5; ++l)
        for (int q = 0; q <= 2 * (l - 1); ++q)
            CHECK(tor_character(l, q, Partition(std::vector<int>(l, 1))) ==
                  binomial(2 * (l - 1), q));
    CHECK(tor_character(2, 1, Partition({2})) == -2);
    for (const auto& mu : partitions_of(4)) CHECK(tor_character(4, 0, mu) == 1);
    CHECK(tor_character(2, 5, Partition({2})) == 0);  // out of range: 0, not an error
}

TEST_CASE("tor invariants") {
    CHECK(tor_invariants(3, 2).dim == 1);
    CHECK(tor_invariants(3, 3).dim == 0);
    CHECK(tor_invariants(2, 4).dim == 0);
    CHECK(tor_invariants(3, 2).line_label == "(Lambda^2 N*)^(1) (x) L_Y^(3)");
    // pairing against the trivial character agrees
    for (int l = 1; l <= 6; ++l)
        for (int q = 0; q <= 2 * (l - 1); ++q) {
            Rat acc = 0;
            for (const auto& mu : partitions_of(l))
                acc += Rat(class_size(mu) * tor_character(l, q, mu));
            CHECK(acc == Rat(tor_invariants(l, q).dim * factorial(l)));
        }
}

TEST_CASE("Koszul brute-force oracle") {
    CHECK(koszul_tor_oracle(1, 0, 1) == 1);
    for (int q = 1; q <= 2; ++q) CHECK(koszul_tor_oracle(1, q, 2) == 0);
    for (int q = 0; q <= 4; ++q) {
        Int expect = binomial(2, q);
        CHECK(koszul_tor_oracle(2, q, 2) == expect);
        CHECK(koszul_tor_oracle(2, q, 3) == expect);
        CHECK(koszul_tor_oracle(2, q, 4) == expect);
    }
    CHECK(koszul_tor_oracle(3, 4, 4) == 1);
    CHECK_THROWS_AS(koszul_tor_oracle(4, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(koszul_tor_oracle(2, 0, 1), std::invalid_argument);
}

TEST_CASE("gamma inclusions and omega powers") {
    CHECK(gamma_inclusion_invariants(1, 0));
    CHECK(gamma_inclusion_invariants(2, 2));
    CHECK(gamma_inclusion_invariants(3, 2));
    CHECK(gamma_inclusion_invariants(3, 4));
    for (int k = 2; k <= 5; ++k)
        for (int l = 1; l <= k - 1; ++l) CHECK(omega_power_nonzero(k, l));
    CHECK_THROWS_AS(omega_power_nonzero(3, 3), std::invalid_argument);
}

TEST_CASE("wedge space actions are representations") {
    for (int p = 2; p <= 4; ++p)
        for (int q = 0; q <= 2 * (p - 1); q += 1) {
            WedgeSpace w(p, q);
            for_each_permutation(p, [&](const Perm& a) {
                // spot-check with one fixed second permutation
                Perm b = perm_identity(p);
                std::swap(b[0], b[p - 1]);
                CHECK(w.action(perm_compose(a, b)) == w.action(a) * w.action(b));
            });
        }
}

TEST_CASE("mixed permutation action") {
    MixedPartition part;
    part.blocks = {{0, 1}, {2}, {3}};
    Perm id = perm_identity(4);
    MixedAction a = mixed_perm_action(part, id);
    CHECK(a.sign == 1);
    for (const auto& b : a.betas) CHECK(b == perm_identity(static_cast<int>(b.size())));

    // transposition inside S_0
    Perm t01 = {1, 0, 2, 3};
    a = mixed_perm_action(part, t01);
    CHECK(a.sign == -1);
    CHECK(a.betas[0] == (Perm{1, 0}));
    CHECK(a.image.blocks[0] == (std::vector<int>{0, 1}));

    // exchanging the two singleton blocks leaves S_0 untouched: sign +1
    Perm t23 = {0, 1, 3, 2};
    a = mixed_perm_action(part, t23);
    CHECK(a.sign == 1);
    CHECK(a.betas[0] == perm_identity(2));
    CHECK(a.image.blocks[1] == (std::vector<int>{3}));
    CHECK(a.image.blocks[2] == (std::vector<int>{2}));

    // composition law, exhaustively for l = 3
    MixedPartition p3;
    p3.blocks = {{0, 2}, {1}};
    for_each_permutation(3, [&](const Perm& tau) {
        for_each_permutation(3, [&](const Perm& tau2) {
            MixedAction a1 = mixed_perm_action(p3, tau);
            MixedAction a2 = mixed_perm_action(a1.image, tau2);
            MixedAction a12 = mixed_perm_action(p3, perm_compose(tau2, tau));
            CHECK(a12.sign == a1.sign * a2.sign);
            for (size_t b = 0; b < p3.blocks.size(); ++b)
                CHECK(a12.betas[b] == perm_compose(a2.betas[b], a1.betas[b]));
        });
    });
}

TEST_CASE("spectral sign correction") {
    CHECK(ss_sign_correction(0, 7) == 1);
    CHECK(ss_sign_correction(1, 1) == -1);
    CHECK(ss_sign_correction(1, 2) == 1);
}
