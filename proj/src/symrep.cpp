#include "hilbtaut/symrep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hilbtaut {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

namespace {

void gen_partitions(int m, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(m, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(m - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex g_partition_mutex;
std::map<int, std::vector<Partition>> g_partitions;

}  // namespace

const std::vector<Partition>& partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::lock_guard<std::mutex> lock(g_partition_mutex);
    auto it = g_partitions.find(m);
    if (it != g_partitions.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m == 0 ? 1 : m, cur, out);
    return g_partitions.emplace(m, std::move(out)).first->second;
}

Int class_size(const Partition& mu) {
    // z_mu = prod c^{m_c} m_c!
    Int z = 1;
    int run = 0;
    for (size_t i = 0; i < mu.parts.size(); ++i) {
        run = (i > 0 && mu.parts[i] == mu.parts[i - 1]) ? run + 1 : 1;
        z *= mu.parts[i] * run;
    }
    return factorial(mu.weight()) / z;
}

int sign_of_class(const Partition& mu) {
    return ((mu.weight() - mu.length()) % 2 == 0) ? 1 : -1;
}

Int fixed_points_of_power(const Partition& mu, int e) {
    Int f = 0;
    for (int c : mu.parts)
        if (e % c == 0) f += c;
    return f;
}

namespace {

// Murnaghan-Nakayama on beta-numbers (first-column hook lengths):
// removing a border strip of size s is replacing one beta number b by b-s,
// provided b-s >= 0 and b-s is not already a beta number; the strip height
// is the count of beta numbers strictly between b-s and b.
Int mn_rec(std::vector<int>& beta, const std::vector<int>& mu, size_t pos) {
    if (pos == mu.size()) return 1;
    int s = mu[pos];
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int nb = b - s;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int other : beta) {
            if (other == nb) { clash = true; break; }
            if (other > nb && other < b) ++height;
        }
        if (clash) continue;
        beta[i] = nb;
        Int sub = mn_rec(beta, mu, pos + 1);
        beta[i] = b;
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

std::mutex g_table_mutex;
std::map<int, CharacterTable> g_tables;

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    if (lambda.weight() == 0) return 1;
    int rows = lambda.length();
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda.parts[i] + (rows - 1 - i);
    return mn_rec(beta, mu.parts, 0);
}

const CharacterTable& character_table(int m) {
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_tables.find(m);
        if (it != g_tables.end()) return it->second;
    }
    // Build outside the lock, insert idempotently.
    CharacterTable t;
    t.m = m;
    t.classes = partitions_of(m);
    t.class_sizes.reserve(t.classes.size());
    for (const auto& mu : t.classes) t.class_sizes.push_back(class_size(mu));
    t.chi.resize(t.classes.size());
    for (size_t l = 0; l < t.classes.size(); ++l) {
        t.chi[l].resize(t.classes.size());
        for (size_t c = 0; c < t.classes.size(); ++c)
            t.chi[l][c] = mn_character(t.classes[l], t.classes[c]);
    }
    std::lock_guard<std::mutex> lock(g_table_mutex);
    return g_tables.emplace(m, std::move(t)).first->second;
}

Int schur_dim(const Partition& lambda, int dimV) {
    if (lambda.length() > dimV) return 0;
    std::vector<Int> l(lambda.parts.begin(), lambda.parts.end());
    l.resize(dimV, 0);
    Rat prod = 1;
    for (int i = 0; i < dimV; ++i)
        for (int j = i + 1; j < dimV; ++j)
            prod *= Rat(l[i] - l[j] + j - i, j - i);
    return rat_to_int(prod, "schur_dim");
}

Int hook_length_dim(const Partition& lambda) {
    int m = lambda.weight();
    if (m == 0) return 1;
    std::vector<int> conj(lambda.parts[0], 0);
    for (int p : lambda.parts)
        for (int c = 0; c < p; ++c) conj[c]++;
    mpz_class num = 1;
    for (int i = 1; i <= m; ++i) num *= i;
    mpz_class den = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c)
            den *= (lambda.parts[r] - c) + (conj[c] - r) - 1;
    mpz_class q = num / den;
    return static_cast<Int>(q.get_si());
}

Int std_rep_power_sum(int k, const Partition& mu, int e) {
    if (mu.weight() != k) throw std::invalid_argument("std_rep_power_sum: |mu| != k");
    return fixed_points_of_power(mu, e) - 1;
}

std::vector<Rat> elementary_from_power_sums(const std::vector<Rat>& p, int qmax) {
    // q e_q = sum_{e=1}^{q} (-1)^{e-1} e_{q-e} p_e
    std::vector<Rat> el(qmax + 1);
    el[0] = 1;
    for (int q = 1; q <= qmax; ++q) {
        Rat acc = 0;
        for (int e = 1; e <= q; ++e) {
            Rat term = el[q - e] * p[e];
            if (e % 2 == 0) acc -= term;
            else acc += term;
        }
        el[q] = acc / q;
    }
    return el;
}

Int ext_doubled_std_character(int k, int q, const Partition& mu) {
    if (q < 0 || q > 2 * (k - 1)) return 0;
    std::vector<Rat> p(q + 1);
    for (int e = 1; e <= q; ++e) p[e] = Rat(2 * std_rep_power_sum(k, mu, e));
    auto el = elementary_from_power_sums(p, q);
    return rat_to_int(el[q], "ext_doubled_std_character");
}

Int ext_inv_dim(int k, int q, Twist twist) {
    if (k < 1) throw std::invalid_argument("ext_inv_dim: k >= 1 required");
    if (q < 0 || q > 2 * (k - 1)) return 0;
    Rat acc = 0;
    for (const auto& mu : partitions_of(k)) {
        Int ch = ext_doubled_std_character(k, q, mu);
        Int tw = (twist == Twist::sign) ? sign_of_class(mu) : 1;
        acc += Rat(class_size(mu) * ch * tw);
    }
    acc /= factorial(k);
    Int d = rat_to_int(acc, "ext_inv_dim");
    if (d < 0) throw PropertyFalsified("ext_inv_dim: negative invariant dimension");
    return d;
}

namespace {

// prod over cycles c of sigma of (1 - (-s)^c), divided by (1+s):
// characteristic coefficients of 1 + s*(eigenvalue) over rho_k.
std::vector<Int> rho_char_poly(const std::vector<int>& cycles, int k) {
    std::vector<Int> poly(k + 1, 0);
    poly[0] = 1;
    int deg = 0;
    for (int c : cycles) {
        // multiply by 1 - (-s)^c == 1 - (-1)^c s^c
        std::vector<Int> np(std::min(k, deg + c) + 1, 0);
        Int coef = (c % 2 == 0) ? -1 : 1;  // -(-1)^c
        for (int i = 0; i <= deg; ++i) {
            np[i] += poly[i];
            if (i + c < static_cast<int>(np.size())) np[i + c] += coef * poly[i];
        }
        poly = np;
        deg = std::min(k, deg + c);
    }
    // exact division by (1+s)
    std::vector<Int> quo(k, 0);
    Int carry = 0;
    for (int i = 0; i < k; ++i) {
        quo[i] = poly[i] - carry;
        carry = quo[i];
    }
    if (poly[k] - carry != 0) throw PropertyFalsified("rho_char_poly: division by (1+s) not exact");
    return quo;  // degree k-1
}

}  // namespace

Int ext_inv_dim_bruteforce(int k, int q, Twist twist) {
    if (k < 1 || k > 8) throw std::invalid_argument("ext_inv_dim_bruteforce: 1 <= k <= 8");
    if (q < 0 || q > 2 * (k - 1)) return 0;
    Int acc = 0;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<bool> seen(k, false);
        std::vector<int> cycles;
        for (int i = 0; i < k; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) { seen[j] = true; ++len; }
            cycles.push_back(len);
        }
        auto cp = rho_char_poly(cycles, k);  // coefficients of prod (1 + s lambda_i)
        // doubled eigenvalues: square the polynomial, take s^q.
        Int coeff = 0;
        for (int i = 0; i <= q; ++i) {
            Int a = (i < static_cast<int>(cp.size())) ? cp[i] : 0;
            Int b = (q - i < static_cast<int>(cp.size())) ? cp[q - i] : 0;
            coeff += a * b;
        }
        int sgn = 1;
        if (twist == Twist::sign)
            sgn = ((k - static_cast<int>(cycles.size())) % 2 == 0) ? 1 : -1;
        acc += sgn * coeff;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rat res = Rat(acc) / factorial(k);
    return rat_to_int(res, "ext_inv_dim_bruteforce");
}

Int rep_inv_dim(const std::function<Rat(const Partition&)>& chi, int m) {
    Rat acc = 0;
    for (const auto& mu : partitions_of(m)) acc += Rat(class_size(mu)) * chi(mu);
    acc /= factorial(m);
    Int d = rat_to_int(acc, "rep_inv_dim");
    if (d < 0) throw PropertyFalsified("rep_inv_dim: negative multiplicity");
    return d;
}

}  // namespace hilbtaut
