#include "hilbtaut/cech.hpp"

#include "hilbtaut/symrep.hpp"

#include <map>

namespace hilbtaut {

int epsilon_sign(int i, Subset J) {
    if (!(J & (1u << i))) throw std::invalid_argument("epsilon_sign: i not in J");
    int below = __builtin_popcount(J & ((1u << i) - 1u));
    return (below % 2 == 0) ? 1 : -1;
}

int equivariant_sign(const Perm& sigma, Subset J) {
    Subset pre = subset_image(perm_inverse(sigma), J);
    std::vector<int> img;
    for (int j : subset_elements(pre)) img.push_back(sigma[j]);
    return sort_sign(img);
}

IMat IMat::operator*(const IMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("IMat: shape mismatch");
    IMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Int v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

bool IMat::is_zero() const {
    for (Int v : a)
        if (v) return false;
    return true;
}

IMat differential_matrix(int n, int p) {
    if (p < 0 || p > n - 2) throw std::invalid_argument("differential_matrix: p out of range");
    auto src = subsets_of_card(n, p + 1);
    auto dst = subsets_of_card(n, p + 2);
    std::map<Subset, int> src_idx;
    for (size_t i = 0; i < src.size(); ++i) src_idx[src[i]] = static_cast<int>(i);
    IMat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t r = 0; r < dst.size(); ++r) {
        Subset J = dst[r];
        for (int i : subset_elements(J))
            m.at(static_cast<int>(r), src_idx[J & ~(1u << i)]) = epsilon_sign(i, J);
    }
    return m;
}

IMat action_matrix(int n, const Perm& sigma, int p) {
    auto idxs = subsets_of_card(n, p + 1);
    std::map<Subset, int> pos;
    for (size_t i = 0; i < idxs.size(); ++i) pos[idxs[i]] = static_cast<int>(i);
    Perm inv = perm_inverse(sigma);
    IMat m(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()));
    for (size_t r = 0; r < idxs.size(); ++r) {
        Subset J = idxs[r];
        m.at(static_cast<int>(r), pos[subset_image(inv, J)]) = equivariant_sign(sigma, J);
    }
    return m;
}

namespace {

// Graded trace of a coordinate permutation on ring^{(x)slots}: product over
// cycles of ring(t^c).
GradedDim ring_power_trace(const RingModel& ring, const std::vector<int>& cycles) {
    GradedDim r = GradedDim::point(0);
    GradedDim rd = ring.internal_dims();
    for (int c : cycles) {
        GradedDim f;
        for (const auto& [d, m] : rd.entries()) f.set(d * c, f.at(d * c) + m);
        r = tensor(r, f);
    }
    return r;
}

}  // namespace

GradedTrace section_character(int n, Subset I, const RingModel& ring, const GradedDim& L_dims,
                              const Perm& sigma) {
    if (subset_image(sigma, I) != I)
        throw std::invalid_argument("section_character: sigma does not stabilize I");
    // S(I) acts on the fiber through the alternant (the farfalla sign);
    // geometrically it fixes the diagonal coordinate. S(Ibar) permutes the
    // O-factors.
    int sign = equivariant_sign(sigma, I);
    std::vector<int> elems = subset_elements(I);
    // cycles of sigma restricted to the complement
    std::vector<bool> inI(n, false);
    for (int e : elems) inI[e] = true;
    std::vector<int> cycles;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (inI[i] || seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = sigma[j]) { seen[j] = true; ++len; }
        cycles.push_back(len);
    }
    GradedDim tr = tensor(L_dims, ring_power_trace(ring, cycles));
    GradedTrace t;
    for (const auto& [d, m] : tr.entries()) t[d] = sign * m;
    return t;
}

namespace {

// Signed graded trace as a map degree -> Int (may be negative mid-average).
using STrace = GradedTrace;

STrace strace_of(const GradedDim& g, int sign) {
    STrace t;
    for (const auto& [d, m] : g.entries()) t[d] = sign * m;
    return t;
}

void strace_add(STrace& acc, const STrace& t, Int w) {
    for (const auto& [d, m] : t) acc[d] += w * m;
}

GradedDim strace_average(const STrace& acc, Int order, const char* ctx) {
    GradedDim g;
    for (const auto& [d, m] : acc) {
        if (m % order != 0)
            throw PropertyFalsified(std::string(ctx) + ": non-integral invariant dimension");
        Int v = m / order;
        if (v < 0) throw PropertyFalsified(std::string(ctx) + ": negative invariant dimension");
        if (v) g.set(d, v);
    }
    return g;
}

STrace block_trace(const RingModel& ring, const GradedDim& L_dims, int sign,
                   const std::vector<int>& comp_cycles) {
    GradedDim unsigned_trace = tensor(L_dims, ring_power_trace(ring, comp_cycles));
    return strace_of(unsigned_trace, sign);
}

}  // namespace

GradedDim invariants_of_term(int n, int p, const RingModel& ring, const GradedDim& L_dims) {
    if (p < 0 || p > n - 1) throw std::invalid_argument("invariants_of_term: p out of range");
    // Single orbit; representative I0 = {0..p}; Stab = S(I0) x S(comp).
    int a = p + 1, b = n - p - 1;
    STrace acc;
    for (const auto& mu : partitions_of(a)) {
        int sgn = sign_of_class(mu);
        Int ca = class_size(mu);
        for (const auto& nu : partitions_of(b)) {
            Int cb = class_size(nu);
            GradedDim tr = tensor(L_dims, ring_power_trace(ring, nu.parts));
            strace_add(acc, strace_of(tr, sgn), ca * cb);
        }
    }
    return strace_average(acc, factorial(a) * factorial(b), "invariants_of_term");
}

GradedDim invariants_of_term_direct(int n, int p, const RingModel& ring, const GradedDim& L_dims) {
    if (p < 0 || p > n - 1) throw std::invalid_argument("invariants_of_term_direct: p out of range");
    // Average of the full S_n trace on C^p; blocks with sigma(I) = I
    // contribute epsilon_{sigma,I} x L(t) x prod_cycles(sigma|comp).
    auto idxs = subsets_of_card(n, p + 1);
    STrace acc;
    for (const auto& mu : partitions_of(n)) {
        // representative permutation of cycle type mu
        Perm sigma(n);
        int at = 0;
        for (int c : mu.parts) {
            for (int i = 0; i < c; ++i) sigma[at + i] = at + (i + 1) % c;
            at += c;
        }
        STrace per_sigma;
        for (Subset I : idxs) {
            if (subset_image(sigma, I) != I) continue;
            int sign = equivariant_sign(sigma, I);
            std::vector<bool> inI(n, false);
            for (int e : subset_elements(I)) inI[e] = true;
            std::vector<int> cycles;
            std::vector<bool> seen(n, false);
            for (int i = 0; i < n; ++i) {
                if (inI[i] || seen[i]) continue;
                int len = 0;
                for (int j = i; !seen[j]; j = sigma[j]) { seen[j] = true; ++len; }
                cycles.push_back(len);
            }
            strace_add(per_sigma, block_trace(ring, L_dims, sign, cycles), 1);
        }
        strace_add(acc, per_sigma, class_size(mu));
    }
    return strace_average(acc, factorial(n), "invariants_of_term_direct");
}

}  // namespace hilbtaut
