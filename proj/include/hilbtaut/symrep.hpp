#pragma once

#include "hilbtaut/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hilbtaut {

// Partition of m: weakly decreasing positive parts. The empty partition is
// the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string str() const;
};

// All partitions of m, lexicographically decreasing parts, deterministic order.
const std::vector<Partition>& partitions_of(int m);

// Conjugacy class of S_m with cycle type mu: size m!/z_mu.
Int class_size(const Partition& mu);

// Sign of any permutation of cycle type mu: (-1)^(m - #parts).
int sign_of_class(const Partition& mu);

// Number of fixed points of sigma^e for sigma of cycle type mu.
Int fixed_points_of_power(const Partition& mu, int e);

// Irreducible character chi_lambda(mu) by Murnaghan-Nakayama.
// |lambda| must equal |mu|.
Int mn_character(const Partition& lambda, const Partition& mu);

// Full character table of S_m, rows and columns indexed by partitions_of(m).
// Memoized; first fill is safe under concurrent access.
struct CharacterTable {
    int m = 0;
    std::vector<Partition> classes;   // = partitions_of(m)
    std::vector<Int> class_sizes;
    std::vector<std::vector<Int>> chi;  // chi[lambda_idx][class_idx]
};
const CharacterTable& character_table(int m);

// dim S^lambda(V) for dim V = dimV (Weyl dimension formula for GL).
Int schur_dim(const Partition& lambda, int dimV);

// Hook length formula: dim of the S_m-irreducible V_lambda.
Int hook_length_dim(const Partition& lambda);

// p_e of the eigenvalues of sigma (cycle type mu, |mu| = k) on the standard
// representation rho_k: fix(sigma^e) - 1.
Int std_rep_power_sum(int k, const Partition& mu, int e);

// Elementary symmetric functions e_0..e_qmax from power sums p_1..p_qmax
// via Newton's identities, exact rationals.
std::vector<Rat> elementary_from_power_sums(const std::vector<Rat>& p, int qmax);

// Character of Lambda^q(V (x) rho_k) at class mu, where V is 2-dimensional
// with trivial S_k-action; power sums are doubled standard-rep power sums.
Int ext_doubled_std_character(int k, int q, const Partition& mu);

enum class Twist { trivial, sign };

// dim of the S_k-invariants of Lambda^q(V (x) rho_k) (V = C^2 trivial),
// optionally twisted by the alternant epsilon_k.
Int ext_inv_dim(int k, int q, Twist twist = Twist::trivial);

// Independent oracle: averages [s^q] of the squared characteristic-polynomial
// product prod_c (1 - (-s)^c)^2 / (1+s)^2 over all k! permutations enumerated
// explicitly (exact integer coefficients, no root-of-unity arithmetic).
Int ext_inv_dim_bruteforce(int k, int q, Twist twist = Twist::trivial);

// <chi, 1> = (1/m!) sum class_size(mu) chi(mu). Must come out a nonnegative
// integer for a genuine character; otherwise throws PropertyFalsified.
Int rep_inv_dim(const std::function<Rat(const Partition&)>& chi, int m);

}  // namespace hilbtaut
