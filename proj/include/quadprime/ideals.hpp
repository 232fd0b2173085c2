// Prime ideals in two-generator form I = [m, shift + tau]: validation,
// lattice-point membership, conjugation, and the red/green display class
// used by the atlas for non-principal prime ideals.
#pragma once

#include "quadprime/field.hpp"
#include "quadprime/sieve.hpp"

namespace quadprime {

/// Ideal given by its norm m and the generator shift + tau, 0 <= shift < m.
struct IdealSpec {
    int64_t m = 0;
    int64_t shift = 0;

    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// True iff [m, shift + tau] really is an ideal of norm m with m the norm of
/// a prime ideal: m prime and not inert, shift in range, and m | N(shift + tau).
inline bool validate_ideal(const FieldParams& f, IdealSpec I) {
    if (I.m <= 0 || I.shift < 0 || I.shift >= I.m) return false;
    if (!is_prime(I.m) || kronecker(f.d, I.m) < 0) return false;
    return norm(f, RingElement{I.shift, 1}) % I.m == 0;
}

namespace detail {

inline void require_valid_ideal(const FieldParams& f, IdealSpec I) {
    if (!validate_ideal(f, I))
        throw std::domain_error("invalid ideal [" + std::to_string(I.m) + ", " +
                                std::to_string(I.shift) + " + tau]");
}

} // namespace detail

/// z in Z*m + Z*(shift + tau), i.e. x - shift*y = 0 (mod m).
inline bool contains(const FieldParams& f, IdealSpec I, RingElement z) {
    detail::require_valid_ideal(f, I);
    return mod_floor(checked_sub(z.x, checked_mul(I.shift, z.y)), I.m) == 0;
}

/// The conjugate ideal. conj(shift + tau) is shift - tau (whole basis) or
/// shift + 1 - tau (half basis); negating gives a generator shift' + tau
/// with shift' = (-shift - (d mod 2)) mod m. An involution.
inline IdealSpec conjugate_ideal(const FieldParams& f, IdealSpec I) {
    detail::require_valid_ideal(f, I);
    return {I.m, mod_floor(checked_sub(checked_neg(I.shift), mod_floor(f.d, 2)), I.m)};
}

/// Display class of a lattice point relative to I and its conjugate.
enum class IdealClass { None, ClassI, ClassConjI };

/// A point represents a non-principal prime ideal of the I-class when its
/// norm is a prime norm times m and the point lies in I (or in conj(I) for
/// the conjugate class). The membership test is what separates the two
/// mutually conjugate classes; the norm condition alone cannot. When I is
/// self-conjugate both collapse to ClassI.
inline IdealClass ideal_display_class(const FieldParams& f, IdealSpec I,
                                      const NormSet& T, RingElement z) {
    detail::require_valid_ideal(f, I);
    const int64_t n = norm(f, z);
    if (n % I.m != 0) return IdealClass::None;
    if (!is_prime_norm(T, n / I.m)) return IdealClass::None;
    if (contains(f, I, z)) return IdealClass::ClassI;
    if (contains(f, conjugate_ideal(f, I), z)) return IdealClass::ClassConjI;
    return IdealClass::None;
}

/// Smallest valid [m, shift] with m a split prime; the default ideal when
/// none is requested explicitly.
inline IdealSpec find_default_ideal(const FieldParams& f, int64_t prime_limit = 1000000) {
    for (int64_t m = 2; m <= prime_limit; ++m) {
        if (!is_prime(m) || kronecker(f.d, m) != 1) continue;
        for (int64_t s = 0; s < m; ++s)
            if (norm(f, RingElement{s, 1}) % m == 0) return {m, s};
    }
    throw std::domain_error("find_default_ideal: no split prime below " +
                            std::to_string(prime_limit));
}

} // namespace quadprime
