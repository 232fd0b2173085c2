// Test-only reference implementations, kept deliberately literal: the
// Kronecker symbol assembled clause by clause from its definition, with the
// Legendre factors found by exhaustive residue enumeration.
#pragma once

#include "quadprime/arithmetic.hpp"

namespace oracles {

// (a/p) for an odd prime p, by enumerating squares mod p.
inline int legendre_by_enumeration(std::int64_t a, std::int64_t p) {
    const std::int64_t r = quadprime::mod_floor(a, p);
    if (r == 0) return 0;
    for (std::int64_t n = 1; n < p; ++n)
        if ((n * n) % p == r) return 1;
    return -1;
}

// Full symbol: Legendre clause for odd primes, the (a/2) rule, the Jacobi
// product over the factorization of b > 0 (empty product for b = 1), and
// the sign extension for b <= 0.
inline int kronecker_by_definition(std::int64_t a, std::int64_t b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (b < 0) {
        const int base = kronecker_by_definition(a, -b);
        return a < 0 ? -base : base;
    }
    int result = 1;
    for (auto [p, e] : quadprime::factorize(b).factors) {
        int fac;
        if (p == 2) {
            const std::int64_t r8 = quadprime::mod_floor(a, 8);
            fac = (r8 % 2 == 0) ? 0 : (r8 == 1 || r8 == 7) ? 1 : -1;
        } else {
            fac = legendre_by_enumeration(a, p);
        }
        for (int i = 0; i < e; ++i) result *= fac;
    }
    return result;
}

} // namespace oracles
