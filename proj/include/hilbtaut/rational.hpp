#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbtaut {

// All engine arithmetic is exact: machine integers where results provably
// fit (dimensions, characters, signs), GMP rationals everywhere division
// appears (projector averages, elimination, Newton identities).
using Int = long;  // 64-bit here; GMP interoperates with long directly
using Rat = mpq_class;

// Thrown when a computation contradicts a property the engine relies on
// (surjectivity, integrality of an invariant dimension, a rank that must
// match). Distinct from bad input: it signals a falsified identity.
class PropertyFalsified : public std::runtime_error {
public:
    explicit PropertyFalsified(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

inline Int rat_to_int(const Rat& r, const char* ctx) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1)
        throw PropertyFalsified(std::string(ctx) + ": expected integer, got " + c.get_str());
    if (!c.get_num().fits_slong_p())
        throw std::overflow_error(std::string(ctx) + ": integer out of range");
    return static_cast<Int>(c.get_num().get_si());
}

inline Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class acc = 1;
    for (Int i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    if (!acc.fits_slong_p()) throw std::overflow_error("binomial overflow");
    return static_cast<Int>(acc.get_si());
}

inline Int factorial(Int n) {
    Int f = 1;
    for (Int i = 2; i <= n; ++i) {
        if (f > (1LL << 60) / i) throw std::overflow_error("factorial overflow");
        f *= i;
    }
    return f;
}

}  // namespace hilbtaut
