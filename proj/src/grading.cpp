#include "hilbtaut/grading.hpp"

#include "hilbtaut/symrep.hpp"

#include <sstream>

namespace hilbtaut {

GradedDim::GradedDim(std::initializer_list<std::pair<const int, Int>> init) {
    for (const auto& [d, m] : init) set(d, m);
}

GradedDim GradedDim::point(int degree, Int mult) {
    GradedDim g;
    g.set(degree, mult);
    return g;
}

Int GradedDim::at(int d) const {
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
}

void GradedDim::set(int d, Int mult) {
    if (mult < 0) throw PropertyFalsified("GradedDim: negative multiplicity at degree " + std::to_string(d));
    if (mult == 0) dims_.erase(d);
    else dims_[d] = mult;
}

Int GradedDim::total_dim() const {
    Int t = 0;
    for (const auto& [d, m] : dims_) t += m;
    return t;
}

Int GradedDim::euler_char() const {
    Int t = 0;
    for (const auto& [d, m] : dims_) t += (d % 2 == 0) ? m : -m;
    return t;
}

int GradedDim::min_degree() const {
    if (dims_.empty()) throw std::logic_error("min_degree of zero space");
    return dims_.begin()->first;
}

int GradedDim::max_degree() const {
    if (dims_.empty()) throw std::logic_error("max_degree of zero space");
    return dims_.rbegin()->first;
}

std::string GradedDim::str() const {
    if (dims_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    os << '{';
    for (const auto& [d, m] : dims_) {
        if (!first) os << ", ";
        os << d << ':' << m;
        first = false;
    }
    os << '}';
    return os.str();
}

GradedDim GradedDim::shifted(int by) const {
    GradedDim g;
    for (const auto& [d, m] : dims_) g.set(d + by, m);
    return g;
}

GradedDim direct_sum(const GradedDim& a, const GradedDim& b) {
    GradedDim g = a;
    for (const auto& [d, m] : b.entries()) g.set(d, g.at(d) + m);
    return g;
}

GradedDim tensor(const GradedDim& a, const GradedDim& b) {
    GradedDim g;
    for (const auto& [da, ma] : a.entries())
        for (const auto& [db, mb] : b.entries())
            g.set(da + db, g.at(da + db) + ma * mb);
    return g;
}

GradedDim scale(const GradedDim& a, Int c) {
    if (c == 0) return GradedDim();
    GradedDim g;
    for (const auto& [d, m] : a.entries()) g.set(d, m * c);
    return g;
}

GradedDim subtract(const GradedDim& a, const GradedDim& b, const char* ctx) {
    GradedDim g = a;
    for (const auto& [d, m] : b.entries()) {
        Int r = g.at(d) - m;
        if (r < 0)
            throw PropertyFalsified(std::string(ctx) + ": negative multiplicity " +
                                    std::to_string(r) + " at degree " + std::to_string(d));
        g.set(d, r);
    }
    return g;
}

int koszul_sign(const Perm& sigma, const std::vector<int>& degrees) {
    if (sigma.size() != degrees.size())
        throw std::invalid_argument("koszul_sign: size mismatch");
    int k = static_cast<int>(sigma.size());
    long long e = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sigma[i] > sigma[j]) e += static_cast<long long>(degrees[i]) * degrees[j];
    return (e % 2 == 0) ? 1 : -1;
}

namespace {

// Bivariate series in s (power-degree, truncated at m) and t (grading).
// series[j] is the t-polynomial at s^j.
using Series = std::vector<std::map<int, Int>>;

void series_mul_factor(Series& acc, int m, int d, const std::vector<Int>& coeffs) {
    // coeffs[j] is the t^{dj} s^j coefficient of the factor.
    Series out(m + 1);
    for (int j0 = 0; j0 <= m; ++j0)
        for (const auto& [td, c0] : acc[j0])
            for (int j = 0; j + j0 <= m && j < static_cast<int>(coeffs.size()); ++j) {
                if (coeffs[j] == 0) continue;
                out[j0 + j][td + d * j] += c0 * coeffs[j];
            }
    acc = std::move(out);
}

GradedDim graded_power(const GradedDim& v, int m, bool symmetric, bool plain) {
    if (m < 0) throw std::invalid_argument("graded power: negative exponent");
    if (m == 0) return GradedDim::point(0);
    Series acc(m + 1);
    acc[0][0] = 1;
    for (const auto& [d, mult] : v.entries()) {
        bool even = plain || (d % 2 == 0);
        bool binomial_side = symmetric ? !even : even;
        std::vector<Int> coeffs;
        if (binomial_side) {
            // (1 + s t^d)^mult
            for (int j = 0; j <= std::min<Int>(m, mult); ++j) coeffs.push_back(binomial(mult, j));
        } else {
            // (1 - s t^d)^{-mult}
            for (int j = 0; j <= m; ++j) coeffs.push_back(binomial(mult + j - 1, j));
        }
        series_mul_factor(acc, m, d, coeffs);
    }
    GradedDim g;
    for (const auto& [td, c] : acc[m]) {
        if (c < 0) throw PropertyFalsified("graded power: negative coefficient");
        if (c) g.set(td, c);
    }
    return g;
}

GradedDim molien(const GradedDim& v, int m, bool symmetric, bool plain) {
    if (m < 0) throw std::invalid_argument("molien: negative exponent");
    if (m == 0) return GradedDim::point(0);
    std::map<int, Rat> acc;
    for (const auto& mu : partitions_of(m)) {
        // prod over cycles of the signed degree substitution
        std::map<int, Rat> prod;
        prod[0] = 1;
        for (int c : mu.parts) {
            std::map<int, Rat> cyc;
            for (const auto& [d, mult] : v.entries()) {
                Int sgn = 1;
                if (!plain && (d % 2 != 0) && (c - 1) % 2 != 0) sgn = -1;
                cyc[d * c] += Rat(sgn * mult);
            }
            std::map<int, Rat> np;
            for (const auto& [d1, c1] : prod)
                for (const auto& [d2, c2] : cyc) {
                    Rat t = c1 * c2;
                    if (t != 0) np[d1 + d2] += t;
                }
            prod = std::move(np);
        }
        Rat w = Rat(class_size(mu));
        if (!symmetric) w *= sign_of_class(mu);
        for (const auto& [d, c] : prod) acc[d] += w * c;
    }
    Int mfact = factorial(m);
    GradedDim g;
    for (auto& [d, c] : acc) {
        c /= mfact;
        Int val = rat_to_int(c, "molien");
        if (val < 0) throw PropertyFalsified("molien: negative multiplicity");
        if (val) g.set(d, val);
    }
    return g;
}

}  // namespace

GradedDim sym_power(const GradedDim& v, int m) { return graded_power(v, m, true, false); }
GradedDim ext_power(const GradedDim& v, int m) { return graded_power(v, m, false, false); }
GradedDim sym_power_plain(const GradedDim& v, int m) { return graded_power(v, m, true, true); }
GradedDim ext_power_plain(const GradedDim& v, int m) { return graded_power(v, m, false, true); }

GradedDim sym_power_molien(const GradedDim& v, int m) { return molien(v, m, true, false); }
GradedDim ext_power_molien(const GradedDim& v, int m) { return molien(v, m, false, false); }
GradedDim sym_power_molien_plain(const GradedDim& v, int m) { return molien(v, m, true, true); }
GradedDim ext_power_molien_plain(const GradedDim& v, int m) { return molien(v, m, false, true); }

}  // namespace hilbtaut
