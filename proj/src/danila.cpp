#include "hilbtaut/danila.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hilbtaut {

GroupElem elem_compose(const GroupElem& a, const GroupElem& b) {
    GroupElem c;
    c.g = perm_compose(a.g, b.g);
    if (!a.h.empty() || !b.h.empty()) c.h = perm_compose(a.h, b.h);
    return c;
}

GroupElem elem_inverse(const GroupElem& a) {
    GroupElem c;
    c.g = perm_inverse(a.g);
    if (!a.h.empty()) c.h = perm_inverse(a.h);
    return c;
}

Int SymProduct::order() const { return factorial(n_) * factorial(k_); }

GroupElem SymProduct::identity() const {
    GroupElem e;
    e.g = perm_identity(n_);
    if (k_ > 0) e.h = perm_identity(k_);
    return e;
}

std::vector<GroupElem> SymProduct::generators() const {
    std::vector<GroupElem> gens;
    GroupElem e = identity();
    for (int i = 0; i + 1 < n_; ++i) {
        GroupElem t = e;
        std::swap(t.g[i], t.g[i + 1]);
        gens.push_back(t);
    }
    for (int i = 0; i + 1 < k_; ++i) {
        GroupElem t = e;
        std::swap(t.h[i], t.h[i + 1]);
        gens.push_back(t);
    }
    return gens;
}

void SymProduct::for_each(const std::function<void(const GroupElem&)>& fn) const {
    GroupElem e = identity();
    Perm g = e.g;
    do {
        if (k_ == 0) {
            GroupElem x;
            x.g = g;
            fn(x);
        } else {
            Perm h = perm_identity(k_);
            do {
                GroupElem x;
                x.g = g;
                x.h = h;
                fn(x);
            } while (std::next_permutation(h.begin(), h.end()));
        }
    } while (std::next_permutation(g.begin(), g.end()));
}

std::vector<std::vector<int>> orbits(const GAction& action) {
    auto gens = action.group.generators();
    std::vector<int> comp(action.count, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < action.count; ++i) {
        if (comp[i] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> orbit;
        std::deque<int> queue{i};
        comp[i] = id;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            orbit.push_back(x);
            for (const auto& gen : gens) {
                int y = action.apply(gen, x);
                if (comp[y] < 0) {
                    comp[y] = id;
                    queue.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::map<int, GroupElem> orbit_transversal(const GAction& action, int index) {
    auto gens = action.group.generators();
    std::map<int, GroupElem> trans;
    trans[index] = action.group.identity();
    std::deque<int> queue{index};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (const auto& gen : gens) {
            int y = action.apply(gen, x);
            if (!trans.count(y)) {
                trans[y] = elem_compose(gen, trans[x]);
                queue.push_back(y);
            }
        }
    }
    return trans;
}

Int stabilizer_order(const GAction& action, int index) {
    Int orbit_size = static_cast<Int>(orbit_transversal(action, index).size());
    Int order = action.group.order();
    if (order % orbit_size != 0)
        throw PropertyFalsified("stabilizer_order: orbit size does not divide group order");
    return order / orbit_size;
}

std::vector<GroupElem> stabilizer_elements(const GAction& action, int index) {
    std::vector<GroupElem> stab;
    action.group.for_each([&](const GroupElem& e) {
        if (action.apply(e, index) == index) stab.push_back(e);
    });
    return stab;
}

std::vector<Perm> subset_stabilizer_generators(int n, Subset I) {
    std::vector<Perm> gens;
    auto add_part = [&](const std::vector<int>& part) {
        for (size_t i = 0; i + 1 < part.size(); ++i) {
            Perm p = perm_identity(n);
            std::swap(p[part[i]], p[part[i + 1]]);
            gens.push_back(std::move(p));
        }
    };
    std::vector<int> inside = subset_elements(I), outside;
    for (int c = 0; c < n; ++c)
        if (!(I & (1u << c))) outside.push_back(c);
    add_part(inside);
    add_part(outside);
    return gens;
}

void BlockModule::validate() const {
    GroupElem id = action.group.identity();
    for (int i = 0; i < action.count; ++i) {
        BlockMap bm = map_of(id, i);
        if (bm.target != i || !bm.mat.equals(SparseMat::identity(dims[i])))
            throw PropertyFalsified("BlockModule: identity does not act as identity on block " +
                                    std::to_string(i));
    }
    auto gens = action.group.generators();
    for (const auto& a : gens)
        for (const auto& b : gens) {
            GroupElem ab = elem_compose(a, b);
            for (int i = 0; i < action.count; ++i) {
                BlockMap mb = map_of(b, i);
                BlockMap ma = map_of(a, mb.target);
                BlockMap mab = map_of(ab, i);
                if (mab.target != ma.target ||
                    !mab.mat.equals(ma.mat.compose(mb.mat)))
                    throw PropertyFalsified("BlockModule: composition law fails on block " +
                                            std::to_string(i));
            }
        }
}

namespace {

// Per-degree trace of a block self-map.
std::map<int, Rat> graded_trace(const BlockModule& m, int block, const SparseMat& mat) {
    std::map<int, Rat> t;
    for (int c = 0; c < mat.cols; ++c)
        for (const auto& [r, v] : mat.col[c])
            if (r == c) t[m.degree_of(block, c)] += v;
    return t;
}

GradedDim average_traces(const std::map<int, Rat>& acc, Int order, const char* ctx) {
    GradedDim g;
    for (const auto& [d, v] : acc) {
        Rat q = v / order;
        Int dim = rat_to_int(q, ctx);
        if (dim < 0) throw PropertyFalsified(std::string(ctx) + ": negative invariant dimension");
        if (dim) g.set(d, dim);
    }
    return g;
}

}  // namespace

GradedDim invariants_danila(const BlockModule& m) {
    GradedDim total;
    for (const auto& orbit : orbits(m.action)) {
        int rep = orbit.front();
        auto stab = stabilizer_elements(m.action, rep);
        std::map<int, Rat> acc;
        for (const auto& s : stab) {
            BlockMap bm = m.map_of(s, rep);
            if (bm.target != rep)
                throw PropertyFalsified("invariants_danila: stabilizer element moves block");
            for (const auto& [d, v] : graded_trace(m, rep, bm.mat)) acc[d] += v;
        }
        total = direct_sum(total, average_traces(acc, static_cast<Int>(stab.size()),
                                                 "invariants_danila"));
    }
    return total;
}

GradedDim invariants_direct(const BlockModule& m, Int order_guard) {
    Int order = m.action.group.order();
    if (order > order_guard)
        throw std::invalid_argument("invariants_direct: group order exceeds guard");
    Int total_dim = 0;
    for (int d : m.dims) total_dim += d;
    std::vector<int> offset(m.dims.size() + 1, 0);
    for (size_t i = 0; i < m.dims.size(); ++i) offset[i + 1] = offset[i] + m.dims[i];

    if (total_dim <= 400) {
        // Materialize the projector, check idempotency, rank per degree.
        QMatrix p(static_cast<int>(total_dim), static_cast<int>(total_dim));
        m.action.group.for_each([&](const GroupElem& e) {
            for (int i = 0; i < m.action.count; ++i) {
                BlockMap bm = m.map_of(e, i);
                for (int c = 0; c < bm.mat.cols; ++c)
                    for (const auto& [r, v] : bm.mat.col[c])
                        p.at(offset[bm.target] + r, offset[i] + c) += v;
            }
        });
        Rat inv(1, static_cast<unsigned long>(order));
        p = p.scaled(inv);
        if (!(p * p == p)) throw PropertyFalsified("invariants_direct: projector not idempotent");
        // rank per degree stratum (the projector preserves degree)
        std::map<int, std::vector<int>> strata;
        for (int i = 0; i < m.action.count; ++i)
            for (int c = 0; c < m.dims[i]; ++c) strata[m.degree_of(i, c)].push_back(offset[i] + c);
        GradedDim g;
        for (const auto& [deg, idxs] : strata) {
            QMatrix sub(static_cast<int>(idxs.size()), static_cast<int>(idxs.size()));
            for (size_t r = 0; r < idxs.size(); ++r)
                for (size_t c = 0; c < idxs.size(); ++c) sub.at(static_cast<int>(r), static_cast<int>(c)) = p.at(idxs[r], idxs[c]);
            int rk = rank_of(sub);
            if (rk) g.set(deg, rk);
        }
        return g;
    }

    // Large module: rank of the idempotent equals its trace.
    std::map<int, Rat> acc;
    m.action.group.for_each([&](const GroupElem& e) {
        for (int i = 0; i < m.action.count; ++i) {
            BlockMap bm = m.map_of(e, i);
            if (bm.target != i) continue;
            for (const auto& [d, v] : graded_trace(m, i, bm.mat)) acc[d] += v;
        }
    });
    return average_traces(acc, order, "invariants_direct");
}

std::vector<QVec> invariant_block_basis(const BlockModule& m, int block) {
    auto stab = stabilizer_elements(m.action, block);
    std::vector<SparseMat> mats;
    mats.reserve(stab.size());
    bool all_signed = true;
    for (const auto& s : stab) {
        BlockMap bm = m.map_of(s, block);
        if (bm.target != block)
            throw PropertyFalsified("invariant_block_basis: stabilizer element moves block");
        all_signed = all_signed && bm.mat.is_signed_permutation();
        mats.push_back(std::move(bm.mat));
    }
    int dim = m.dims[block];
    std::vector<QVec> basis;

    if (all_signed) {
        // Orbit sums of basis vectors; an orbit dies when it meets itself
        // with opposite sign.
        std::vector<int> state(dim, 0);  // 0 unseen, 1 done
        for (int start = 0; start < dim; ++start) {
            if (state[start]) continue;
            std::map<int, Rat> orbit_sign;
            orbit_sign[start] = 1;
            std::deque<int> queue{start};
            bool dead = false;
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                for (const auto& mat : mats) {
                    const auto& [y, coef] = mat.col[x][0];
                    Rat want = orbit_sign[x] * coef;
                    auto it = orbit_sign.find(y);
                    if (it == orbit_sign.end()) {
                        orbit_sign[y] = want;
                        queue.push_back(y);
                    } else if (it->second != want) {
                        dead = true;
                    }
                }
            }
            for (const auto& [x, s] : orbit_sign) state[x] = 1;
            if (dead) continue;
            QVec v(dim, Rat(0));
            for (const auto& [x, s] : orbit_sign) v[x] = s;
            basis.push_back(std::move(v));
        }
        // normalize: leading coefficient +1 at least index, sort by lead
        for (auto& v : basis) {
            int lead = -1;
            for (int i = 0; i < dim; ++i)
                if (v[i] != 0) { lead = i; break; }
            if (v[lead] < 0)
                for (auto& x : v) x = -x;
        }
        std::sort(basis.begin(), basis.end(), [&](const QVec& a, const QVec& b) {
            for (int i = 0; i < dim; ++i) {
                bool za = a[i] == 0, zb = b[i] == 0;
                if (za != zb) return zb;
            }
            return false;
        });
        return basis;
    }

    // General case: project unit vectors per degree stratum and reduce.
    std::map<int, std::vector<int>> strata;
    for (int c = 0; c < dim; ++c) strata[m.degree_of(block, c)].push_back(c);
    for (const auto& [deg, idxs] : strata) {
        std::vector<QVec> projected;
        for (int c : idxs) {
            QVec acc(dim, Rat(0));
            for (const auto& mat : mats)
                for (const auto& [r, v] : mat.col[c]) acc[r] += v;
            Rat inv(1, static_cast<unsigned long>(stab.size()));
            for (auto& x : acc) x *= inv;
            projected.push_back(std::move(acc));
        }
        for (auto& v : column_reduce(std::move(projected))) basis.push_back(std::move(v));
    }
    return basis;
}

void validate_equivariance(const MorphismFamily& f, const BlockModule& src,
                           const BlockModule& tgt) {
    auto gens = src.action.group.generators();
    for (const auto& gen : gens)
        for (int i = 0; i < src.action.count; ++i) {
            BlockMap gi = src.map_of(gen, i);
            // lhs: sum over j of f_{g(i), g(j)} o g_M, rhs: g_N o f_{i,j}
            std::map<int, SparseMat> lhs, rhs;
            for (const auto& comp : f.components(gi.target)) {
                SparseMat m = comp.mat.compose(gi.mat);
                auto it = lhs.find(comp.target);
                if (it == lhs.end()) lhs.emplace(comp.target, std::move(m));
                else {
                    for (int c = 0; c < m.cols; ++c)
                        for (auto& e : m.col[c]) it->second.col[c].push_back(e);
                }
            }
            for (const auto& comp : f.components(i)) {
                BlockMap gj = tgt.map_of(gen, comp.target);
                SparseMat m = gj.mat.compose(comp.mat);
                auto it = rhs.find(gj.target);
                if (it == rhs.end()) rhs.emplace(gj.target, std::move(m));
                else {
                    for (int c = 0; c < m.cols; ++c)
                        for (auto& e : m.col[c]) it->second.col[c].push_back(e);
                }
            }
            std::set<int> targets;
            for (const auto& [t, mm] : lhs) targets.insert(t);
            for (const auto& [t, mm] : rhs) targets.insert(t);
            for (int t : targets) {
                SparseMat zero(tgt.dims[t], src.dims[i]);
                const SparseMat& a = lhs.count(t) ? lhs.at(t) : zero;
                const SparseMat& b = rhs.count(t) ? rhs.at(t) : zero;
                if (!a.equals(b))
                    throw PropertyFalsified(
                        "morphism family not equivariant at block " + std::to_string(i) +
                        " target " + std::to_string(t));
            }
        }
}

namespace {

// Precomposed summands of f^G(u) = sum over cosets of f_{g(i0),j0}(g u):
// one sparse matrix per orbit element adjacent to j0.
std::vector<SparseMat> coset_summands(const MorphismFamily& f, const BlockModule& src,
                                      int i0, int j0,
                                      const std::map<int, GroupElem>& transversal) {
    std::vector<SparseMat> out;
    for (const auto& [a, g] : transversal) {
        auto comps = f.components(a);
        bool any = false;
        for (const auto& comp : comps)
            if (comp.target == j0) any = true;
        if (!any) continue;
        BlockMap ga = src.map_of(g, i0);
        if (ga.target != a)
            throw PropertyFalsified("morphism_invariants: transversal/block mismatch");
        for (const auto& comp : comps)
            if (comp.target == j0) out.push_back(comp.mat.compose(ga.mat));
    }
    return out;
}

QVec apply_summands(const std::vector<SparseMat>& summands, int tgt_dim, const QVec& u) {
    QVec acc(tgt_dim, Rat(0));
    for (const auto& mat : summands) {
        QVec z = mat.apply(u);
        for (size_t r = 0; r < z.size(); ++r) acc[r] += z[r];
    }
    return acc;
}

}  // namespace

QMatrix morphism_invariants_block(const MorphismFamily& f, const BlockModule& src,
                                  const BlockModule& tgt, int i0, int j0,
                                  const std::vector<QVec>& src_basis,
                                  const std::vector<QVec>& tgt_basis) {
    auto transversal = orbit_transversal(src.action, i0);
    auto summands = coset_summands(f, src, i0, j0, transversal);
    QMatrix m(static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()));
    for (size_t c = 0; c < src_basis.size(); ++c) {
        QVec img = apply_summands(summands, tgt.dims[j0], src_basis[c]);
        QVec coords = coordinates_in_echelon(tgt_basis, img, "morphism_invariants");
        for (size_t r = 0; r < coords.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
    }
    return m;
}

int InvariantSpace::total_dim() const { return static_cast<int>(vec_degrees.size()); }

GradedDim InvariantSpace::dims() const {
    GradedDim g;
    for (int d : vec_degrees) g.set(d, g.at(d) + 1);
    return g;
}

InvariantSpace invariant_space(const BlockModule& m) {
    InvariantSpace s;
    for (const auto& orbit : orbits(m.action)) {
        int rep = orbit.front();
        auto basis = invariant_block_basis(m, rep);
        for (const auto& v : basis) {
            int deg = 0;
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) { deg = m.degree_of(rep, static_cast<int>(i)); break; }
            s.vec_degrees.push_back(deg);
        }
        s.reps.push_back(rep);
        s.bases.push_back(std::move(basis));
    }
    return s;
}

QMatrix morphism_invariants(const MorphismFamily& f, const BlockModule& src,
                            const BlockModule& tgt, const InvariantSpace& s,
                            const InvariantSpace& t) {
    validate_equivariance(f, src, tgt);
    QMatrix m(t.total_dim(), s.total_dim());
    int coff = 0;
    for (size_t sb = 0; sb < s.reps.size(); ++sb) {
        int roff = 0;
        for (size_t tb = 0; tb < t.reps.size(); ++tb) {
            QMatrix blockm = morphism_invariants_block(f, src, tgt, s.reps[sb], t.reps[tb],
                                                       s.bases[sb], t.bases[tb]);
            for (int r = 0; r < blockm.rows(); ++r)
                for (int c = 0; c < blockm.cols(); ++c) m.at(roff + r, coff + c) = blockm.at(r, c);
            roff += static_cast<int>(t.bases[tb].size());
        }
        coff += static_cast<int>(s.bases[sb].size());
    }
    return m;
}

QMatrix morphism_invariants_factored(const MorphismFamily& f, const BlockModule& src,
                                     const BlockModule& tgt, int i0, int j0,
                                     const std::vector<GroupElem>& P,
                                     const std::vector<GroupElem>& Q,
                                     const std::vector<QVec>& src_basis,
                                     const std::vector<QVec>& tgt_basis) {
    // Clause 1: Stab(j0) = P x Q as a direct product.
    auto stab_j0 = stabilizer_elements(tgt.action, j0);
    {
        std::set<GroupElem> prod, stab(stab_j0.begin(), stab_j0.end());
        for (const auto& p : P)
            for (const auto& q : Q) {
                if (!(elem_compose(p, q) == elem_compose(q, p)))
                    throw PropertyFalsified("DMS clause failed: P and Q do not commute");
                prod.insert(elem_compose(p, q));
            }
        if (prod.size() != P.size() * Q.size() || prod != stab)
            throw PropertyFalsified("DMS clause failed: Stab(j0) != P x Q");
    }
    // Clause 2: Q acts trivially on N_{j0}.
    for (const auto& q : Q) {
        BlockMap bm = tgt.map_of(q, j0);
        if (bm.target != j0 || !bm.mat.equals(SparseMat::identity(tgt.dims[j0])))
            throw PropertyFalsified("DMS clause failed: Q does not act trivially on N_{j0}");
    }
    // Clause 3: f_{g(i0), j0} = 0 unless [g] in Stab(j0)/Stab(i0), i.e. every
    // orbit element adjacent to j0 is s(i0) for some s in Stab(j0).
    auto transversal = orbit_transversal(src.action, i0);
    {
        std::set<int> reachable;
        for (const auto& s : stab_j0) reachable.insert(src.action.apply(s, i0));
        for (const auto& [a, g] : transversal)
            for (const auto& comp : f.components(a))
                if (comp.target == j0 && !reachable.count(a))
                    throw PropertyFalsified(
                        "DMS clause failed: component from outside Stab(j0)/Stab(i0)");
    }
    // Clause 4: M_{i0}^{Stab(i0) n Stab(j0)} = M_{i0}^{Stab(i0)}.
    {
        auto stab_i0 = stabilizer_elements(src.action, i0);
        std::set<GroupElem> j0set(stab_j0.begin(), stab_j0.end());
        std::vector<SparseMat> inter;
        for (const auto& s : stab_i0)
            if (j0set.count(s)) inter.push_back(src.map_of(s, i0).mat);
        // dim of intersection-invariants via projector trace
        Rat tr = 0;
        for (const auto& mat : inter) tr += mat.trace();
        tr /= static_cast<Int>(inter.size());
        Int dim_inter = rat_to_int(tr, "DMS clause 4");
        if (dim_inter != static_cast<Int>(src_basis.size()))
            throw PropertyFalsified(
                "DMS clause failed: M_{i0}^{Stab(i0) n Stab(j0)} != M_{i0}^{Stab(i0)}");
    }
    // Clause 5: the coset decomposition is free: the Stab(j0)-orbit of i0
    // splits as |Q| copies of the P-orbit.
    std::map<int, GroupElem> p_transversal;
    for (const auto& p : P) {
        int a = src.action.apply(p, i0);
        if (!p_transversal.count(a)) p_transversal[a] = p;
    }
    {
        std::set<int> stab_orbit;
        for (const auto& s : stab_j0) stab_orbit.insert(src.action.apply(s, i0));
        if (static_cast<Int>(stab_orbit.size()) !=
            static_cast<Int>(Q.size()) * static_cast<Int>(p_transversal.size()))
            throw PropertyFalsified("DMS clause failed: coset decomposition is not free");
    }
    auto summands = coset_summands(f, src, i0, j0, p_transversal);
    QMatrix m(static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()));
    for (size_t c = 0; c < src_basis.size(); ++c) {
        QVec img = apply_summands(summands, tgt.dims[j0], src_basis[c]);
        for (auto& x : img) x *= static_cast<Int>(Q.size());
        QVec coords = coordinates_in_echelon(tgt_basis, img, "morphism_invariants_factored");
        for (size_t r = 0; r < coords.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
    }
    return m;
}

}  // namespace hilbtaut
