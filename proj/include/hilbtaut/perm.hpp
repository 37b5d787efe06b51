#pragma once

#include "hilbtaut/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace hilbtaut {

// Permutation of {0..m-1}: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (a*b)(i) = a(b(i))
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

inline int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Cycle lengths of p, weakly decreasing.
inline std::vector<int> perm_cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> cyc;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        cyc.push_back(len);
    }
    std::sort(cyc.rbegin(), cyc.rend());
    return cyc;
}

// Sign of the permutation sorting v (entries distinct).
inline int sort_sign(std::vector<int> v) {
    int sign = 1;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        for (size_t j = 0; j + 1 < v.size() - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    return sign;
}

inline void for_each_permutation(int m, const std::function<void(const Perm&)>& fn) {
    Perm p = perm_identity(m);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

// ---- subsets of {0..n-1} as bitmasks ----

using Subset = uint32_t;

inline int subset_card(Subset s) { return __builtin_popcount(s); }

inline std::vector<int> subset_elements(Subset s) {
    std::vector<int> e;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u) e.push_back(i);
    return e;
}

inline Subset subset_of(const std::vector<int>& e) {
    Subset s = 0;
    for (int i : e) s |= (1u << i);
    return s;
}

inline Subset subset_image(const Perm& sigma, Subset s) {
    Subset r = 0;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u) r |= (1u << sigma[i]);
    return r;
}

// All cardinality-c subsets of {0..n-1} in colex order (masks increasing).
inline std::vector<Subset> subsets_of_card(int n, int c) {
    std::vector<Subset> out;
    for (Subset s = 0; s < (1u << n); ++s)
        if (subset_card(s) == c) out.push_back(s);
    return out;
}

}  // namespace hilbtaut
