#include "hilbtaut/danila.hpp"

#include <doctest.h>

#include <memory>
#include <set>
#include <random>

using namespace hilbtaut;

namespace {

// Natural S_n action on points, each block a line with a chosen character.
BlockModule line_blocks(int n, int flavor /*0 trivial, 1 sign*/) {
    BlockModule m;
    m.action.group = SymProduct(n, 0);
    m.action.count = n;
    m.action.apply = [](const GroupElem& e, int i) { return e.g[i]; };
    m.dims.assign(n, 1);
    m.map_of = [flavor](const GroupElem& e, int i) {
        SparseMat s(1, 1);
        s.add(0, 0, flavor == 1 ? perm_sign(e.g) : 1);
        return BlockMap{e.g[i], std::move(s)};
    };
    return m;
}

}  // namespace

TEST_CASE("orbits") {
    BlockModule nat = line_blocks(3, 0);
    auto o = orbits(nat.action);
    REQUIRE(o.size() == 1);
    CHECK(o[0].size() == 3);

    // S_2 x S_2 on pairs, componentwise: one orbit
    GAction pairs;
    pairs.group = SymProduct(2, 2);
    pairs.count = 4;
    pairs.apply = [](const GroupElem& e, int idx) { return e.g[idx / 2] * 2 + e.h[idx % 2]; };
    CHECK(orbits(pairs).size() == 1);

    // trivial group: singleton orbits
    GAction trivial;
    trivial.group = SymProduct(1, 0);
    trivial.count = 5;
    trivial.apply = [](const GroupElem&, int idx) { return idx; };
    CHECK(orbits(trivial).size() == 5);
}

TEST_CASE("stabilizer orders") {
    // S_4 on 2-subsets: stabilizer of {0,1} has order 4
    auto subsets = subsets_of_card(4, 2);
    GAction act;
    act.group = SymProduct(4, 0);
    act.count = static_cast<int>(subsets.size());
    auto idx = std::make_shared<std::map<Subset, int>>();
    for (size_t i = 0; i < subsets.size(); ++i) (*idx)[subsets[i]] = static_cast<int>(i);
    auto subs = std::make_shared<std::vector<Subset>>(subsets);
    act.apply = [idx, subs](const GroupElem& e, int i) {
        return idx->at(subset_image(e.g, (*subs)[i]));
    };
    CHECK(stabilizer_order(act, idx->at(subset_of({0, 1}))) == 4);

    BlockModule nat = line_blocks(5, 0);
    CHECK(stabilizer_order(nat.action, 0) == factorial(4));
}

TEST_CASE("closed-form subset stabilizer generators") {
    auto subsets = subsets_of_card(4, 2);
    GAction act;
    act.group = SymProduct(4, 0);
    act.count = static_cast<int>(subsets.size());
    auto idx = std::make_shared<std::map<Subset, int>>();
    for (size_t i = 0; i < subsets.size(); ++i) (*idx)[subsets[i]] = static_cast<int>(i);
    auto subs = std::make_shared<std::vector<Subset>>(subsets);
    act.apply = [idx, subs](const GroupElem& e, int i) {
        return idx->at(subset_image(e.g, (*subs)[i]));
    };
    for (Subset I : subsets) {
        auto gens = subset_stabilizer_generators(4, I);
        // every generator fixes I; the group they generate has the full
        // stabilizer order |I|! (4-|I|)!
        for (const auto& g : gens) CHECK(subset_image(g, I) == I);
        std::set<Perm> closure{perm_identity(4)};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& g : gens)
                for (const auto& h : std::set<Perm>(closure))
                    if (closure.insert(perm_compose(g, h)).second) grew = true;
        }
        CHECK(static_cast<Int>(closure.size()) == stabilizer_order(act, idx->at(I)));
    }
}

TEST_CASE("invariants: frozen cases") {
    // permutation action of S_3 on 3 lines: one invariant
    CHECK(line_blocks(3, 0).map_of(line_blocks(3, 0).action.group.identity(), 0).target == 0);
    CHECK(invariants_danila(line_blocks(3, 0)) == GradedDim::point(0, 1));
    CHECK(invariants_direct(line_blocks(3, 0)) == GradedDim::point(0, 1));
    // sign representation on a single fixed line: no invariants
    BlockModule sign;
    sign.action.group = SymProduct(2, 0);
    sign.action.count = 1;
    sign.action.apply = [](const GroupElem&, int) { return 0; };
    sign.dims = {1};
    sign.map_of = [](const GroupElem& e, int) {
        SparseMat s(1, 1);
        s.add(0, 0, perm_sign(e.g));
        return BlockMap{0, std::move(s)};
    };
    CHECK(invariants_danila(sign).is_zero());
    CHECK(invariants_direct(sign).is_zero());
    // identity action on a d-dimensional space
    BlockModule id;
    id.action.group = SymProduct(3, 0);
    id.action.count = 1;
    id.action.apply = [](const GroupElem&, int) { return 0; };
    id.dims = {4};
    id.map_of = [](const GroupElem&, int) { return BlockMap{0, SparseMat::identity(4)}; };
    CHECK(invariants_direct(id) == GradedDim::point(0, 4));
}

TEST_CASE("block module validation catches broken composition") {
    BlockModule bad = line_blocks(3, 0);
    bad.map_of = [](const GroupElem& e, int i) {
        SparseMat s(1, 1);
        // sign depending on the image point: not a representation
        s.add(0, 0, (e.g[i] == 1) ? -1 : 1);
        return BlockMap{e.g[i], std::move(s)};
    };
    CHECK_THROWS_AS(bad.validate(), PropertyFalsified);
    line_blocks(3, 1).validate();
}

namespace {

// Full-module oracle for morphism invariants: identify u in M_{i0}^{Stab}
// with U = sum over cosets g u inside the whole module, apply f blockwise,
// and read the j0 component of the image (must be the f^G value).
QVec full_module_image(const MorphismFamily& f, const BlockModule& src, const BlockModule& tgt,
                       int i0, int j0, const QVec& u) {
    auto transversal = orbit_transversal(src.action, i0);
    std::vector<QVec> blocks(src.action.count);
    for (int b = 0; b < src.action.count; ++b) blocks[b].assign(src.dims[b], Rat(0));
    for (const auto& [a, g] : transversal) {
        BlockMap bm = src.map_of(g, i0);
        QVec w = bm.mat.apply(u);
        for (size_t r = 0; r < w.size(); ++r) blocks[a][r] += w[r];
    }
    QVec out(tgt.dims[j0], Rat(0));
    for (int a = 0; a < src.action.count; ++a)
        for (const auto& comp : f.components(a)) {
            if (comp.target != j0) continue;
            QVec z = comp.mat.apply(blocks[a]);
            for (size_t r = 0; r < z.size(); ++r) out[r] += z[r];
        }
    return out;
}

}  // namespace

TEST_CASE("morphism invariants against the full-module oracle") {
    std::mt19937_64 rng(99);
    for (int c = 0; c < 20; ++c) {
        int n = 2 + static_cast<int>(rng() % 3);
        int flavor = static_cast<int>(rng() % 2);
        BlockModule m = line_blocks(n, flavor);
        // f_{i,j} = scalar on every pair: equivariant since blocks are lines
        // with the same character
        Rat scalar(1 + static_cast<int>(rng() % 3));
        MorphismFamily f;
        f.components = [n, scalar](int) {
            std::vector<BlockMap> out;
            for (int j = 0; j < n; ++j) {
                SparseMat s(1, 1);
                s.add(0, 0, scalar);
                out.push_back({j, std::move(s)});
            }
            return out;
        };
        validate_equivariance(f, m, m);
        InvariantSpace inv = invariant_space(m);
        QMatrix mat = morphism_invariants(f, m, m, inv, inv);
        if (flavor == 1) {
            // sign-twisted lines: one invariant for n = 2 (e_0 - e_1), none above
            CHECK(inv.total_dim() == (n == 2 ? 1 : 0));
            if (n == 2) CHECK(mat.at(0, 0) == 0);  // the coset sum cancels
            continue;
        }
        REQUIRE(inv.total_dim() == 1);
        // oracle
        QVec img = full_module_image(f, m, m, inv.reps[0], inv.reps[0], inv.bases[0][0]);
        QVec coords = coordinates_in_echelon(inv.bases[0], img, "test");
        CHECK(mat.at(0, 0) == coords[0]);
        CHECK(mat.at(0, 0) == scalar * n);  // n cosets, scalar each
    }
}

TEST_CASE("morphism invariants: identity and zero families") {
    BlockModule m = line_blocks(4, 0);
    InvariantSpace inv = invariant_space(m);
    MorphismFamily ident;
    ident.components = [](int i) {
        std::vector<BlockMap> out;
        out.push_back({i, SparseMat::identity(1)});
        return out;
    };
    QMatrix mat = morphism_invariants(ident, m, m, inv, inv);
    CHECK(mat == QMatrix::identity(1));
    MorphismFamily zero;
    zero.components = [](int) { return std::vector<BlockMap>{}; };
    CHECK(morphism_invariants(zero, m, m, inv, inv).is_zero());
}

TEST_CASE("non-equivariant families are rejected") {
    BlockModule m = line_blocks(3, 0);
    MorphismFamily bad;
    bad.components = [](int i) {
        std::vector<BlockMap> out;
        SparseMat s(1, 1);
        s.add(0, 0, i == 0 ? 2 : 1);  // block-dependent scalar breaks equivariance
        out.push_back({i, std::move(s)});
        return out;
    };
    CHECK_THROWS_AS(validate_equivariance(bad, m, m), PropertyFalsified);
}

TEST_CASE("DMS factored computation") {
    // G = S_2; M has two swapped lines, N one fixed line with trivial action;
    // Stab(j0) = G = P x Q with P trivial and Q = G acting trivially on N.
    BlockModule M;
    M.action.group = SymProduct(2, 0);
    M.action.count = 2;
    M.action.apply = [](const GroupElem& e, int i) { return e.g[i]; };
    M.dims = {1, 1};
    M.map_of = [](const GroupElem& e, int i) { return BlockMap{e.g[i], SparseMat::identity(1)}; };
    BlockModule N;
    N.action.group = SymProduct(2, 0);
    N.action.count = 1;
    N.action.apply = [](const GroupElem&, int) { return 0; };
    N.dims = {1};
    N.map_of = [](const GroupElem&, int) { return BlockMap{0, SparseMat::identity(1)}; };
    MorphismFamily f;
    f.components = [](int) {
        std::vector<BlockMap> out;
        SparseMat s(1, 1);
        s.add(0, 0, 2);
        out.push_back({0, std::move(s)});
        return out;
    };
    validate_equivariance(f, M, N);
    auto src_basis = invariant_block_basis(M, 0);
    auto tgt_basis = invariant_block_basis(N, 0);
    QMatrix direct = morphism_invariants_block(f, M, N, 0, 0, src_basis, tgt_basis);
    CHECK(direct.at(0, 0) == 4);  // two cosets, scalar 2 each

    GroupElem e = M.action.group.identity();
    GroupElem s = e;
    std::swap(s.g[0], s.g[1]);
    std::vector<GroupElem> P{e}, Q{e, s};
    QMatrix factored = morphism_invariants_factored(f, M, N, 0, 0, P, Q, src_basis, tgt_basis);
    CHECK(factored == direct);

    // Q trivial reduces to the plain computation
    std::vector<GroupElem> P2{e, s}, Q2{e};
    QMatrix factored2 = morphism_invariants_factored(f, M, N, 0, 0, P2, Q2, src_basis, tgt_basis);
    CHECK(factored2 == direct);

    // violated hypothesis: P x Q that is not the stabilizer
    std::vector<GroupElem> Pbad{e}, Qbad{e};
    CHECK_THROWS_WITH_AS(
        (void)morphism_invariants_factored(f, M, N, 0, 0, Pbad, Qbad, src_basis, tgt_basis),
        doctest::Contains("Stab(j0) != P x Q"), PropertyFalsified);
}

TEST_CASE("danila equals direct on product groups") {
    std::mt19937_64 rng(123);
    for (int c = 0; c < 40; ++c) {
        int n = 2 + static_cast<int>(rng() % 2);
        int k = 2 + static_cast<int>(rng() % 2);
        BlockModule m;
        m.action.group = SymProduct(n, k);
        m.action.count = n * k;
        m.action.apply = [n, k](const GroupElem& e, int idx) {
            return e.g[idx / k] * k + e.h[idx % k];
        };
        int flavor = static_cast<int>(rng() % 3);
        m.dims.assign(n * k, 2);
        m.map_of = [flavor, n, k](const GroupElem& e, int idx) {
            SparseMat s(2, 2);
            int sgn = flavor == 0 ? 1 : (flavor == 1 ? perm_sign(e.g) : perm_sign(e.h));
            s.add(0, 0, sgn);
            s.add(1, 1, sgn);
            return BlockMap{e.g[idx / k] * k + e.h[idx % k], std::move(s)};
        };
        CHECK(invariants_danila(m) == invariants_direct(m));
    }
}
