#pragma once

#include "hilbtaut/danila.hpp"
#include "hilbtaut/grading.hpp"
#include "hilbtaut/ringmodel.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hilbtaut {

// Index of a summand L_{a(1)} (x) ... (x) L_{a(k)} of the first page:
// a function {0..k-1} -> nonempty subsets of {0..n-1}.
struct IndexMap {
    int n = 0, k = 0;
    std::vector<Subset> a;

    Subset I0() const;            // union of the doubled values
    Subset Jset() const;          // union of the singleton values
    std::vector<int> S0() const;  // factor positions with |a(i)| >= 2
    int l() const;                // sum |a(i)| - k
    int t() const;                // |I0 n J|
    int lambda(int j) const;      // #a^{-1}({j})
    bool restricted() const;      // injective off S0 (membership in I^p_0)

    bool operator==(const IndexMap& o) const { return n == o.n && k == o.k && a == o.a; }
    bool operator<(const IndexMap& o) const { return a < o.a; }
    std::string str() const;
};

// All a with l(a) = p and |I0(a)| <= 2 (the set I^p); restricted additionally
// imposes injectivity off S0 (the set I^p_0). Deterministic (lex) order.
std::vector<IndexMap> enumerate_index_maps(int n, int k, int p, bool restricted);

struct OrbitClass {
    bool relevant = false;
    int t = -1;  // defined when relevant
};
OrbitClass classify_orbit(const IndexMap& a);

// Stabilizer of a relevant a inside S_n x S_k, as the product of the five
// closed-form factors; errors on irrelevant maps.
struct StabilizerInfo {
    struct Factor {
        std::string name;
        Int order = 1;
        std::vector<GroupElem> elements;  // the factor as a subgroup
    };
    std::vector<Factor> factors;
    Int order = 1;
    std::vector<GroupElem> generators;
};
StabilizerInfo stabilizer_of(const IndexMap& a);

// The module F^{l,q}: h^0(L^l K^{-q/2}) (x) Lambda^{k-l} H^0(L) (x)
// S^{n-k+l-2} H^0(O). Zero when l > k or the symmetric exponent is negative.
GradedDim F_dim(int l, int q, int n, int k, const SurfaceData& sd);

// Invariants of one summand through the three-factor decomposition; equals
// F_dim(p+t, q) exactly in the nonzero regime (asserted).
GradedDim invariant_term(const IndexMap& a, int q, const SurfaceData& sd);

// Section-model blocks of the twisted term (E^{p,q})_0 (x) eps_k over the
// restricted index set, with the comprehensive S_n x S_k action.
namespace detail {
struct PageState;
}
struct PageBlocks {
    int n = 0, k = 0, p = 0, q = 0;
    std::vector<IndexMap> maps;
    BlockModule module;
    InvariantSpace inv;
    std::shared_ptr<const detail::PageState> state;
};
PageBlocks build_page_blocks(int n, int k, int p, int q, const SurfaceData& sd,
                             bool restricted = true);

// Differential family from page-p blocks to page-(p+1) blocks (the induced
// Cech differential with total-complex signs).
MorphismFamily page_differential(const PageBlocks& src, const PageBlocks& tgt);

struct PageComplex {
    int n = 0, k = 0, q = 0;
    std::vector<GradedDim> terms;                // p = 0..k, closed-form assembly
    std::vector<std::vector<int>> term_degrees;  // invariant basis degrees per p
    std::vector<QMatrix> diffs;                  // invariant-level d^p, p = 0..k-1

    struct AlphaVerdict {
        int p = 0;       // odd source degree
        int t = 0;       // 1 or 2 (alpha_1 / alpha_2)
        Int dim = 0;     // square block dimension
        Int rank = 0;
        bool is_iso = false;
        bool dms_agrees = false;  // factored (Lemma DMS) computation matches
    };
    std::vector<AlphaVerdict> alphas;
    bool d_zero_out_of_odd = true;  // no nonzero differential out of even p
};

PageComplex assemble_page(int n, int k, int q, const SurfaceData& sd);

// Graded homology of the assembled complex at degree p.
GradedDim page_homology(const PageComplex& page, int p);

// Direct-sum shape the degeneration theorem predicts for the terms.
std::vector<GradedDim> expected_page_shape(int n, int k, int q, const SurfaceData& sd);

// k = 2 cross-oracle: kernel dims of the explicit (d^0 (x) id)^{S_n} between
// the section models of C^0 (x) C^0 and C^1 (x) C^0; also reports
// surjectivity of that matrix.
GradedDim e00_infinity_k2(int n, const SurfaceData& sd, bool* surjective = nullptr);

// Invariants of the k = 2 term (E^{2,-1})_0 under S_n (expected zero).
GradedDim e2_minus1_invariants(int n, const SurfaceData& sd);

}  // namespace hilbtaut
