// Brute-force reference computations used to cross-check the fast paths:
// a trial-division build of the norm set and an irreducibility test by
// exhaustive divisor search. Deliberately naive and structurally independent
// of the character table and the sieve.
#pragma once

#include "quadprime/atlas.hpp"
#include "quadprime/field.hpp"
#include "quadprime/sieve.hpp"

#include <optional>

namespace quadprime::verify {

/// The norm set built by factoring every n <= max with a smallest-prime-
/// factor table and classifying directly: primes with chi >= 0, squares of
/// inert primes, and products of two distinct inert primes. chi is evaluated
/// by the Kronecker symbol, never through a character table.
inline NormSet reference_norm_set(const FieldParams& f, int64_t max) {
    if (max < 2 || max > 100000000)
        throw std::domain_error("reference_norm_set: max must be in [2, 1e8]");
    std::vector<int32_t> spf(static_cast<std::size_t>(max) + 1, 0);
    for (int64_t i = 2; i <= max; ++i) {
        if (spf[static_cast<std::size_t>(i)] != 0) continue;
        for (int64_t j = i; j <= max; j += i)
            if (spf[static_cast<std::size_t>(j)] == 0)
                spf[static_cast<std::size_t>(j)] = static_cast<int32_t>(i);
    }
    NormSet T;
    T.d = f.d;
    T.max = max;
    T.members = DenseSet(max);
    for (int64_t n = 2; n <= max; ++n) {
        int64_t m = n;
        int64_t p = spf[static_cast<std::size_t>(m)], q = 0;
        int ep = 0, eq = 0;
        while (m > 1 && spf[static_cast<std::size_t>(m)] == p) { m /= p; ++ep; }
        if (m > 1) {
            q = spf[static_cast<std::size_t>(m)];
            while (m > 1 && spf[static_cast<std::size_t>(m)] == q) { m /= q; ++eq; }
        }
        if (m > 1) continue; // three or more distinct primes
        if (q == 0) {
            if (ep == 1 && kronecker(f.d, p) >= 0) T.members.set(n);
            if (ep == 2 && kronecker(f.d, p) == -1) T.members.set(n);
        } else if (ep == 1 && eq == 1) {
            if (kronecker(f.d, p) == -1 && kronecker(f.d, q) == -1) T.members.set(n);
        }
    }
    return T;
}

/// Ascending symmetric difference of two member sets over the same range.
inline std::vector<int64_t> diff_members(const NormSet& a, const NormSet& b) {
    std::vector<int64_t> out;
    const int64_t lim = std::min(a.max, b.max);
    for (int64_t n = 0; n <= lim; ++n)
        if (a.members.test(n) != b.members.test(n)) out.push_back(n);
    return out;
}

/// Divisor-search irreducibility for complex fields: z is irreducible iff it
/// is neither zero nor a unit and no element of norm in [2, sqrt(N(z))]
/// divides it. Division is exact multiplication by the conjugate.
inline bool is_irreducible(const FieldParams& f, RingElement z) {
    if (f.r >= 0)
        throw std::domain_error("is_irreducible: only complex fields are supported");
    const int64_t n = norm(f, z);
    if (n <= 1) return false;
    const int64_t limit = isqrt(n);
    const int64_t box = isqrt(2 * limit) + 2;
    for (int64_t v = -box; v <= box; ++v)
        for (int64_t u = -box; u <= box; ++u) {
            const RingElement cand{u, v};
            const int64_t cn = norm(f, cand);
            if (cn < 2 || cn > limit) continue;
            const RingElement w = multiply(f, z, conjugate(f, cand));
            if (w.x % cn == 0 && w.y % cn == 0) return false;
        }
    return true;
}

/// The point class the irreducibility oracle predicts for a UFD: Unit for
/// norm one, Prime for irreducible points, Other for zero and composites.
inline PointClass reference_point_class(const FieldParams& f, RingElement z) {
    if (z.x == 0 && z.y == 0) return PointClass::Other;
    if (norm(f, z) == 1) return PointClass::Unit;
    return is_irreducible(f, z) ? PointClass::Prime : PointClass::Other;
}

} // namespace quadprime::verify
