#pragma once

#include "hilbtaut/perm.hpp"
#include "hilbtaut/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hilbtaut {

// Finite map degree -> multiplicity: the Poincare polynomial of a graded
// vector space. Multiplicities are nonnegative; zero entries are normalized
// away; degrees may be negative (shift bookkeeping).
class GradedDim {
public:
    GradedDim() = default;
    GradedDim(std::initializer_list<std::pair<const int, Int>> init);
    static GradedDim point(int degree, Int mult = 1);
    static GradedDim zero() { return GradedDim(); }

    Int at(int d) const;
    void set(int d, Int mult);
    bool is_zero() const { return dims_.empty(); }
    Int total_dim() const;
    Int euler_char() const;
    int min_degree() const;  // requires nonzero
    int max_degree() const;

    const std::map<int, Int>& entries() const { return dims_; }
    bool operator==(const GradedDim& o) const { return dims_ == o.dims_; }
    bool operator!=(const GradedDim& o) const { return !(*this == o); }
    std::string str() const;

    GradedDim shifted(int by) const;

private:
    std::map<int, Int> dims_;
};

GradedDim direct_sum(const GradedDim& a, const GradedDim& b);
GradedDim tensor(const GradedDim& a, const GradedDim& b);
GradedDim scale(const GradedDim& a, Int c);

// Degree-wise difference a - b; throws PropertyFalsified on a negative entry.
GradedDim subtract(const GradedDim& a, const GradedDim& b, const char* ctx);

// Sign epsilon_{sigma,p_1..p_k} with sigma(u_1 (x) ... (x) u_k) =
// epsilon * u_1 (x) ... (x) u_k in the graded-commutative algebra:
// product of (-1)^{p_i p_j} over inversions of sigma.
int koszul_sign(const Perm& sigma, const std::vector<int>& degrees);

// Graded (super) symmetric and exterior powers: coefficient of s^m in the
// closed generating functions, computed as truncated bivariate polynomials
// with exact integer coefficients. Truncation order is per call: m times
// the degree range of v.
GradedDim sym_power(const GradedDim& v, int m);
GradedDim ext_power(const GradedDim& v, int m);

// Same powers with every degree treated as even: used for internal
// (section-space) gradings, which carry no Koszul signs.
GradedDim sym_power_plain(const GradedDim& v, int m);
GradedDim ext_power_plain(const GradedDim& v, int m);

// Independent character-sum oracle: (1/m!) sum over cycle types mu of
// class size x prod over cycles of length c of the signed degree
// substitution sum_d (-1)^{d(c-1)} v[d] t^{dc} (exterior variant twists
// by the alternant).
GradedDim sym_power_molien(const GradedDim& v, int m);
GradedDim ext_power_molien(const GradedDim& v, int m);
GradedDim sym_power_molien_plain(const GradedDim& v, int m);
GradedDim ext_power_molien_plain(const GradedDim& v, int m);

}  // namespace hilbtaut
