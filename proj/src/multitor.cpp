#include "hilbtaut/multitor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hilbtaut {

namespace {

// Multilinear wedge expansion: apply a linear map (columns over the target
// W'-basis) to each factor of a wedge monomial and expand. Masks index
// subsets of the target basis.
std::map<Subset, Rat> wedge_image(const QMatrix& w_map, Subset source_mono) {
    std::map<Subset, Rat> acc;
    acc[0] = 1;
    for (int s : subset_elements(source_mono)) {
        std::map<Subset, Rat> next;
        for (const auto& [mask, coef] : acc) {
            for (int r = 0; r < w_map.rows(); ++r) {
                const Rat& c = w_map.at(r, s);
                if (c == 0) continue;
                if (mask & (1u << r)) continue;  // repeated factor dies
                // sign: insert r past the higher set bits of mask
                int above = __builtin_popcount(mask >> (r + 1));
                Rat term = coef * c;
                if (above % 2 != 0) term = -term;
                Subset nm = mask | (1u << r);
                auto it = next.find(nm);
                if (it == next.end()) next.emplace(nm, term);
                else it->second += term;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

QMatrix wedge_matrix(const QMatrix& w_map, const std::vector<Subset>& src_monos,
                     const std::vector<Subset>& dst_monos) {
    std::map<Subset, int> dst_idx;
    for (size_t i = 0; i < dst_monos.size(); ++i) dst_idx[dst_monos[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(dst_monos.size()), static_cast<int>(src_monos.size()));
    for (size_t c = 0; c < src_monos.size(); ++c)
        for (const auto& [mask, coef] : wedge_image(w_map, src_monos[c])) {
            if (coef == 0) continue;
            auto it = dst_idx.find(mask);
            if (it == dst_idx.end()) throw std::logic_error("wedge_matrix: image monomial missing");
            m.at(it->second, static_cast<int>(c)) = coef;
        }
    return m;
}

}  // namespace

WedgeSpace::WedgeSpace(int p, int q) : p_(p), q_(q) {
    if (p < 0 || q < 0) throw std::invalid_argument("WedgeSpace: p, q >= 0");
    int wdim = 2 * std::max(0, p - 1);
    monomials_ = subsets_of_card(wdim, q);
}

QMatrix WedgeSpace::w_action(const Perm& beta) const {
    if (static_cast<int>(beta.size()) != p_) throw std::invalid_argument("WedgeSpace: beta size");
    int r = p_ - 1;
    // rho action on f_a = e_a - e_p: f_a -> f_{beta(a)} - f_{beta(p)}, f_p = 0.
    QMatrix rho(r, r);
    for (int a = 0; a < r; ++a) {
        int ia = beta[a], ip = beta[p_ - 1];
        if (ia < r) rho.at(ia, a) += 1;
        if (ip < r) rho.at(ip, a) -= 1;
    }
    QMatrix w(2 * r, 2 * r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            w.at(2 * a, 2 * b) = rho.at(a, b);
            w.at(2 * a + 1, 2 * b + 1) = rho.at(a, b);
        }
    return w;
}

QMatrix WedgeSpace::action(const Perm& beta) const {
    if (p_ <= 1) return QMatrix::identity(dim());
    return wedge_matrix(w_action(beta), monomials_, monomials_);
}

QMatrix WedgeSpace::gamma_matrix(int pos) const {
    // rho_p(pos) inside rho_{p+1}: the old letters occupy positions
    // {0..p} \ {pos}; old f_a = e_{a'} - e_{last'} with a' the new position
    // of old letter a, expressed in the f-basis of rho_{p+1} (f_{p} = 0).
    WedgeSpace target(p_ + 1, q_);
    int r_old = p_ - 1, r_new = p_;
    std::vector<int> newpos(p_);
    for (int a = 0; a < p_; ++a) newpos[a] = (a < pos) ? a : a + 1;
    QMatrix incl(r_new, r_old);
    for (int a = 0; a < r_old; ++a) {
        int ia = newpos[a], ilast = newpos[p_ - 1];
        if (ia < r_new) incl.at(ia, a) += 1;
        if (ilast < r_new) incl.at(ilast, a) -= 1;
    }
    QMatrix w(2 * r_new, 2 * r_old);
    for (int a = 0; a < r_new; ++a)
        for (int b = 0; b < r_old; ++b) {
            w.at(2 * a, 2 * b) = incl.at(a, b);
            w.at(2 * a + 1, 2 * b + 1) = incl.at(a, b);
        }
    return wedge_matrix(w, monomials_, target.monomials());
}

Int tor_character(int l, int q, const Partition& mu) {
    if (q < 0 || q > 2 * (l - 1)) return 0;
    return ext_doubled_std_character(l, q, mu);
}

TorInvariants tor_invariants(int l, int q) {
    TorInvariants t;
    if (q >= 0 && q <= 2 * (l - 1) && q % 2 == 0) {
        t.dim = 1;
        std::ostringstream os;
        os << "(Lambda^2 N*)^(" << q / 2 << ") (x) L_Y^(" << l << ")";
        t.line_label = os.str();
    }
    return t;
}

namespace {

// Basis element of the sliced l-fold Koszul tensor power: per factor a
// Koszul weight in {0,1,2} with local generator choice (1 / e,f / e^f),
// plus a monomial x^a y^b. Differential: e -> x, f -> y, e^f -> x f - y e,
// spread over factors with the total-complex signs.
struct KoszulTerm {
    std::vector<int> gen;  // per factor: 0 -> 1, 1 -> e, 2 -> f, 3 -> e^f
    int xa = 0, yb = 0;
    bool operator<(const KoszulTerm& o) const {
        return std::tie(gen, xa, yb) < std::tie(o.gen, o.xa, o.yb);
    }
};

int koszul_weight(int gencode) { return gencode == 0 ? 0 : (gencode == 3 ? 2 : 1); }

}  // namespace

Int koszul_tor_oracle(int l, int q, int window) {
    if (l < 1 || l > 3) throw std::invalid_argument("koszul_tor_oracle: l <= 3 guard");
    if (window < l) throw std::invalid_argument("koszul_tor_oracle: window >= l required");
    if (q < 0 || q > 2 * l) return 0;
    Int homology = 0;
    for (int slice = 0; slice <= window; ++slice) {
        // enumerate basis per cohomological degree -m within the slice
        std::map<int, std::vector<KoszulTerm>> basis;
        std::vector<int> gen(l, 0);
        const int codes = 4;
        long long total = 1;
        for (int i = 0; i < l; ++i) total *= codes;
        for (long long it = 0; it < total; ++it) {
            long long v = it;
            int wsum = 0;
            for (int i = 0; i < l; ++i) {
                gen[i] = static_cast<int>(v % codes);
                v /= codes;
                wsum += koszul_weight(gen[i]);
            }
            int mono = slice - wsum;
            if (mono < 0) continue;
            int m = wsum;  // cohomological degree -m ... weights sum = m
            for (int xa = 0; xa <= mono; ++xa) {
                KoszulTerm t;
                t.gen = gen;
                t.xa = xa;
                t.yb = mono - xa;
                basis[m].push_back(t);
            }
        }
        for (auto& [m, vec] : basis) std::sort(vec.begin(), vec.end());

        auto index_of = [&](int m, const KoszulTerm& t) -> int {
            const auto& vec = basis[m];
            auto it = std::lower_bound(vec.begin(), vec.end(), t);
            if (it == vec.end() || t < *it) return -1;
            return static_cast<int>(it - vec.begin());
        };

        // differential from degree -m to -(m-1)
        auto build_d = [&](int m) -> QMatrix {
            const auto& src = basis[m];
            const auto& dst = basis[m - 1];
            QMatrix d(static_cast<int>(dst.size()), static_cast<int>(src.size()));
            for (size_t c = 0; c < src.size(); ++c) {
                const KoszulTerm& t = src[c];
                int prefix = 0;  // sum of koszul weights before factor i
                for (int i = 0; i < l; ++i) {
                    int sign = (prefix % 2 == 0) ? 1 : -1;
                    prefix += koszul_weight(t.gen[i]);
                    auto emit = [&](int code, int dxa, int dyb, int s2) {
                        KoszulTerm u = t;
                        u.gen[i] = code;
                        u.xa += dxa;
                        u.yb += dyb;
                        int r = index_of(m - 1, u);
                        if (r < 0) throw std::logic_error("koszul oracle: slice not closed");
                        d.at(r, static_cast<int>(c)) += sign * s2;
                    };
                    switch (t.gen[i]) {
                        case 0: break;
                        case 1: emit(0, 1, 0, 1); break;            // e -> x
                        case 2: emit(0, 0, 1, 1); break;            // f -> y
                        case 3:                                     // e^f -> x f - y e
                            emit(2, 1, 0, 1);
                            emit(1, 0, 1, -1);
                            break;
                    }
                }
            }
            return d;
        };

        int dim_q = static_cast<int>(basis.count(q) ? basis[q].size() : 0);
        if (dim_q == 0) continue;
        int rank_out = 0;  // d: T^{-q} -> T^{-q+1}
        if (q >= 1) rank_out = rank_of(build_d(q));
        int rank_in = 0;  // d: T^{-q-1} -> T^{-q}
        if (basis.count(q + 1) && !basis[q + 1].empty()) rank_in = rank_of(build_d(q + 1));
        homology += dim_q - rank_out - rank_in;
    }
    if (homology < 0) throw PropertyFalsified("koszul_tor_oracle: negative homology dimension");
    return homology;
}

bool gamma_inclusion_invariants(int l, int q) {
    if (q % 2 != 0 || q < 0 || q > 2 * (l - 1))
        throw std::invalid_argument("gamma_inclusion_invariants: q even in [0, 2(l-1)]");
    if (q == 0) return true;  // identity on the invariant line
    WedgeSpace src(l, q), dst(l + 1, q);
    // invariant line of Lambda^q(C^2 (x) rho_l) by projector over S_l
    int d = src.dim();
    QMatrix proj(d, d);
    Int count = 0;
    for_each_permutation(l, [&](const Perm& beta) {
        proj = proj + src.action(beta);
        ++count;
    });
    QVec inv;
    for (int c = 0; c < d && inv.empty(); ++c) {
        QVec v(d, Rat(0));
        v[c] = 1;
        QVec w = proj.apply(v);
        for (const auto& x : w)
            if (x != 0) { inv = w; break; }
    }
    if (inv.empty()) throw PropertyFalsified("gamma_inclusion_invariants: no invariant found");
    // sum_i theta_i gamma_{l+1}(inv), theta_i in S_{l+1} with theta_i(l) = i
    QMatrix gamma = src.gamma_matrix(l);  // new letter appended at the last position
    QVec img = gamma.apply(inv);
    QVec acc(dst.dim(), Rat(0));
    for (int i = 0; i <= l; ++i) {
        Perm theta = perm_identity(l + 1);
        std::swap(theta[l], theta[i]);
        QVec moved = dst.action(theta).apply(img);
        for (int r = 0; r < dst.dim(); ++r) acc[r] += moved[r];
    }
    for (const auto& x : acc)
        if (x != 0) return true;
    return false;
}

bool omega_power_nonzero(int k, int l) {
    if (l < 1 || l > k - 1) throw std::invalid_argument("omega_power_nonzero: 1 <= l <= k-1");
    // omega^l / (l+1)! projected from Lambda^{2l}(V (x) R_k) to
    // Lambda^{2l}(V (x) rho_k). Work directly in the rho coordinates:
    // pi(e_i) = f_i - (1/k) sum f_b (f_k = 0).
    int r = k - 1;
    // pi(e_i) in the f-basis of rho_k: f_i - (1/k) sum_b f_b (f_{k-1} = 0).
    std::vector<QVec> pf(k, QVec(r, Rat(0)));
    for (int i = 0; i < k; ++i) {
        if (i < r) pf[i][i] = 1;
        for (int b = 0; b < r; ++b) pf[i][b] -= Rat(1, k);
    }
    // omega = sum_i (u e_i) ^ (v e_i): expand its l-th power / (l+1)!.
    // Wedge algebra over masks of the 2r basis vectors (u f_b, v f_b).
    auto wedge_vec = [&](const std::map<Subset, Rat>& acc, const QVec& vecU) {
        std::map<Subset, Rat> next;
        for (const auto& [mask, coef] : acc)
            for (int b = 0; b < static_cast<int>(vecU.size()); ++b) {
                if (vecU[b] == 0 || (mask & (1u << b))) continue;
                int above = __builtin_popcount(mask >> (b + 1));
                Rat term = coef * vecU[b];
                if (above % 2 != 0) term = -term;
                next[mask | (1u << b)] += term;
            }
        return next;
    };
    // pi(u e_i) has u-coordinates only; pi(v e_i) v-coordinates only.
    auto u_vec = [&](int i) {
        QVec v(2 * r, Rat(0));
        for (int b = 0; b < r; ++b) v[2 * b] = pf[i][b];
        return v;
    };
    auto v_vec = [&](int i) {
        QVec v(2 * r, Rat(0));
        for (int b = 0; b < r; ++b) v[2 * b + 1] = pf[i][b];
        return v;
    };
    std::map<Subset, Rat> omega;
    for (int i = 0; i < k; ++i) {
        std::map<Subset, Rat> start;
        start[0] = 1;
        auto w = wedge_vec(wedge_vec(start, u_vec(i)), v_vec(i));
        for (const auto& [mask, c] : w) omega[mask] += c;
    }
    std::map<Subset, Rat> power;
    power[0] = 1;
    for (int t = 0; t < l; ++t) {
        std::map<Subset, Rat> next;
        for (const auto& [m1, c1] : power)
            for (const auto& [m2, c2] : omega) {
                if (m1 & m2) continue;
                // sign of merging two sorted blocks
                int sign = 0;
                for (int b : subset_elements(m2)) sign += __builtin_popcount(m1 >> (b + 1));
                Rat term = c1 * c2;
                if (sign % 2 != 0) term = -term;
                next[m1 | m2] += term;
            }
        power = std::move(next);
    }
    for (const auto& [mask, c] : power)
        if (c != 0) return true;
    return false;
}

int MixedPartition::l() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

void MixedPartition::validate() const {
    std::vector<int> seen;
    for (const auto& b : blocks) {
        if (!std::is_sorted(b.begin(), b.end()))
            throw std::invalid_argument("MixedPartition: blocks must be sorted");
        seen.insert(seen.end(), b.begin(), b.end());
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i))
            throw std::invalid_argument("MixedPartition: blocks must partition {0..l-1}");
}

MixedAction mixed_perm_action(const MixedPartition& part, const Perm& tau) {
    part.validate();
    if (static_cast<int>(tau.size()) != part.l())
        throw std::invalid_argument("mixed_perm_action: tau size mismatch");
    MixedAction out;
    out.image.blocks.resize(part.blocks.size());
    out.betas.resize(part.blocks.size());
    for (size_t bi = 0; bi < part.blocks.size(); ++bi) {
        const auto& S = part.blocks[bi];
        std::vector<int> img;
        for (int x : S) img.push_back(tau[x]);
        // sigma_i(tau): tau(S_i) -> S_i increasing; beta_i = sigma_i o tau|_{S_i},
        // read as a permutation of {0..|S_i|-1} through the sorted enumerations.
        std::vector<int> sorted_img = img;
        std::sort(sorted_img.begin(), sorted_img.end());
        Perm beta(S.size());
        for (size_t j = 0; j < S.size(); ++j) {
            int target = static_cast<int>(std::lower_bound(sorted_img.begin(), sorted_img.end(),
                                                           img[j]) -
                                          sorted_img.begin());
            beta[j] = target;
        }
        out.betas[bi] = beta;
        out.image.blocks[bi] = sorted_img;
        if (bi == 0) out.sign = perm_sign(beta);
    }
    return out;
}

int ss_sign_correction(int deg_i, int deg_next) {
    return (deg_i % 2 != 0 && deg_next % 2 != 0) ? -1 : 1;
}

}  // namespace hilbtaut
