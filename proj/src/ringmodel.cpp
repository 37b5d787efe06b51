#include "hilbtaut/ringmodel.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

namespace hilbtaut {

RingModel::RingModel(std::vector<BasisElem> basis, int unit_index)
    : basis_(std::move(basis)), unit_(unit_index) {
    mult_.assign(static_cast<size_t>(dim()) * dim(), {});
}

const std::vector<std::pair<int, Rat>>& RingModel::mul(int i, int j) const {
    return mult_[static_cast<size_t>(i) * dim() + j];
}

void RingModel::set_mul(int i, int j, std::vector<std::pair<int, Rat>> val) {
    mult_[static_cast<size_t>(i) * dim() + j] = std::move(val);
}

GradedDim RingModel::internal_dims() const {
    GradedDim g;
    for (const auto& b : basis_) g.set(b.internal_degree, g.at(b.internal_degree) + 1);
    return g;
}

namespace {

std::map<int, Rat> to_map(const std::vector<std::pair<int, Rat>>& v) {
    std::map<int, Rat> m;
    for (const auto& [k, c] : v) {
        m[k] += c;
        if (m[k] == 0) m.erase(k);
    }
    return m;
}

}  // namespace

void RingModel::validate() const {
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        // unit
        if (to_map(mul(unit_, i)) != to_map({{i, Rat(1)}}))
            throw PropertyFalsified("RingModel: unit fails on basis " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            int dsum_coh = basis_[i].coh_degree + basis_[j].coh_degree;
            int dsum_int = basis_[i].internal_degree + basis_[j].internal_degree;
            for (const auto& [k, c] : mul(i, j)) {
                if (c == 0) continue;
                if (basis_[k].coh_degree != dsum_coh || basis_[k].internal_degree != dsum_int)
                    throw PropertyFalsified("RingModel: product not graded at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            }
            // graded commutativity
            auto ij = to_map(mul(i, j));
            auto ji = to_map(mul(j, i));
            int sgn = (basis_[i].coh_degree % 2 != 0 && basis_[j].coh_degree % 2 != 0) ? -1 : 1;
            for (auto& [k, c] : ji) c *= sgn;
            if (ij != ji)
                throw PropertyFalsified("RingModel: graded commutativity fails at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    auto assoc_check = [&](int i, int j, int k) {
        std::map<int, Rat> lhs, rhs;
        for (const auto& [m, c] : mul(i, j))
            for (const auto& [l, c2] : mul(m, k)) lhs[l] += c * c2;
        for (const auto& [m, c] : mul(j, k))
            for (const auto& [l, c2] : mul(i, m)) rhs[l] += c * c2;
        for (auto it = lhs.begin(); it != lhs.end();)
            it = (it->second == 0) ? lhs.erase(it) : std::next(it);
        for (auto it = rhs.begin(); it != rhs.end();)
            it = (it->second == 0) ? rhs.erase(it) : std::next(it);
        if (lhs != rhs)
            throw PropertyFalsified("RingModel: associativity fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
    };
    if (n <= 30) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) assoc_check(i, j, k);
    } else {
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int s = 0; s < 500; ++s) assoc_check(pick(rng), pick(rng), pick(rng));
    }
}

RingModel truncated_poly_model(int d) {
    if (d < 0) throw std::invalid_argument("truncated_poly_model: d >= 0 required");
    if (d > 12) throw std::invalid_argument("truncated_poly_model: d <= 12 size guard");
    std::vector<RingModel::BasisElem> basis;
    std::vector<std::pair<int, int>> expo;  // (a, b) for x^a y^b
    int unit = -1;
    for (int tot = 0; tot <= d; ++tot)
        for (int a = tot; a >= 0; --a) {
            int b = tot - a;
            std::ostringstream label;
            label << "x^" << a << "y^" << b;
            if (tot == 0) unit = static_cast<int>(basis.size());
            basis.push_back({label.str(), 0, tot});
            expo.emplace_back(a, b);
        }
    RingModel ring(std::move(basis), unit);
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < expo.size(); ++i) index[expo[i]] = static_cast<int>(i);
    for (size_t i = 0; i < expo.size(); ++i)
        for (size_t j = 0; j < expo.size(); ++j) {
            int a = expo[i].first + expo[j].first;
            int b = expo[i].second + expo[j].second;
            if (a + b > d) continue;  // Artinian truncation
            ring.set_mul(static_cast<int>(i), static_cast<int>(j), {{index[{a, b}], Rat(1)}});
        }
    ring.validate();
    return ring;
}

GradedDim GradedBasis::dims() const {
    GradedDim g;
    for (int d : degrees) g.set(d, g.at(d) + 1);
    return g;
}

void Pairing::validate_degrees() const {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            for (const auto& [k, coef] : table[i][j])
                if (coef != 0 && c.degrees[k] != a.degrees[i] + b.degrees[j])
                    throw PropertyFalsified("Pairing: degree additivity violated");
}

namespace {

// Monomials of total degree e in three variables, lex order; used by the p2
// preset for H^0(P^2, O(e)).
std::vector<std::array<int, 3>> p2_monomials(int e) {
    std::vector<std::array<int, 3>> out;
    for (int a = e; a >= 0; --a)
        for (int b = e - a; b >= 0; --b) out.push_back({a, b, e - a - b});
    return out;
}

GradedDim p2_h(int e) {
    if (e < 0) {
        if (e >= -2) return GradedDim();  // h^0=h^1=h^2=0 for -2 <= e < 0
        // By Serre duality h^2(O(e)) = h^0(O(-3-e)); not needed by the presets.
        GradedDim g;
        g.set(2, binomial(-e - 1, 2));
        return g;
    }
    return GradedDim::point(0, binomial(e + 2, 2));
}

Pairing p2_pairing(int e1, int e2) {
    Pairing p;
    auto m1 = p2_monomials(e1), m2 = p2_monomials(e2), m3 = p2_monomials(e1 + e2);
    std::map<std::array<int, 3>, int> idx;
    for (size_t i = 0; i < m3.size(); ++i) idx[m3[i]] = static_cast<int>(i);
    p.a.degrees.assign(m1.size(), 0);
    p.b.degrees.assign(m2.size(), 0);
    p.c.degrees.assign(m3.size(), 0);
    p.table.assign(m1.size(), std::vector<std::vector<std::pair<int, Rat>>>(m2.size()));
    for (size_t i = 0; i < m1.size(); ++i)
        for (size_t j = 0; j < m2.size(); ++j) {
            std::array<int, 3> s = {m1[i][0] + m2[j][0], m1[i][1] + m2[j][1], m1[i][2] + m2[j][2]};
            p.table[i][j] = {{idx[s], Rat(1)}};
        }
    return p;
}

}  // namespace

SurfaceData preset_p2(int dL, int dA) {
    if (dL < 0 || dA < 0)
        throw ConfigError("p2 preset: negative twist degrees unsupported (not globally generated)");
    SurfaceData s;
    std::ostringstream nm;
    nm << "p2(L=O(" << dL << "),A=O(" << dA << "))";
    s.name = nm.str();
    s.internal_grading = false;
    s.h_O = p2_h(0);
    s.h_L = p2_h(dL);
    s.h_L2 = p2_h(2 * dL);
    s.h_A = p2_h(dA);
    s.h_LA = p2_h(dL + dA);
    s.h_L2A = p2_h(2 * dL + dA);
    s.h_L2A2 = p2_h(2 * dL + 2 * dA);
    s.h_KL = [dL](int l, int q) {
        // K = O(-3); exponent -q/2 with q <= 0 even.
        if (q > 0 || q % 2 != 0) throw std::invalid_argument("h_KL: q must be even and <= 0");
        return p2_h(l * dL + 3 * (q / 2));
    };
    s.pair_L2A_A = p2_pairing(2 * dL + dA, dA);
    s.pair_LA_LA = p2_pairing(dL + dA, dL + dA);
    return s;
}

SurfaceData preset_affine(int d) {
    SurfaceData s;
    s.name = "affine(" + std::to_string(d) + ")";
    s.internal_grading = true;
    s.affine_ring = truncated_poly_model(d);
    GradedDim r = s.affine_ring->internal_dims();
    s.h_O = s.h_L = s.h_L2 = s.h_A = s.h_LA = s.h_L2A = s.h_L2A2 = r;
    s.h_KL = [r](int /*l*/, int q) {
        if (q > 0 || q % 2 != 0) throw std::invalid_argument("h_KL: q must be even and <= 0");
        return r;  // K and L both trivial on the chart
    };
    // pairings: truncated multiplication (same table for both slots)
    const RingModel& ring = *s.affine_ring;
    Pairing p;
    p.a.degrees.resize(ring.dim());
    for (int i = 0; i < ring.dim(); ++i) p.a.degrees[i] = ring.basis(i).internal_degree;
    p.b = p.a;
    p.c = p.a;
    p.table.assign(ring.dim(), std::vector<std::vector<std::pair<int, Rat>>>(ring.dim()));
    for (int i = 0; i < ring.dim(); ++i)
        for (int j = 0; j < ring.dim(); ++j) p.table[i][j] = ring.mul(i, j);
    s.pair_L2A_A = p;
    s.pair_LA_LA = std::move(p);
    return s;
}

SurfaceData preset_formal(GradedDim h_O, GradedDim h_L, GradedDim h_L2, GradedDim h_A,
                          GradedDim h_LA, GradedDim h_L2A, GradedDim h_L2A2) {
    SurfaceData s;
    s.name = "formal";
    s.h_O = std::move(h_O);
    s.h_L = std::move(h_L);
    s.h_L2 = std::move(h_L2);
    s.h_A = std::move(h_A);
    s.h_LA = std::move(h_LA);
    s.h_L2A = std::move(h_L2A);
    s.h_L2A2 = std::move(h_L2A2);
    return s;
}

}  // namespace hilbtaut
