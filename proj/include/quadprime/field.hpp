// The quadratic field Q(sqrt(r)) and its ring of integers Z[tau]:
// field constants, element arithmetic in the {1, tau} basis, norms,
// conjugation, units, and the Behrbohm-Redei necessary criterion for
// unique factorization in real fields.
#pragma once

#include "quadprime/arithmetic.hpp"

namespace quadprime {

/// Constants of one quadratic field. r is the squarefree radicand; d the
/// field discriminant (r when r = 1 mod 4, else 4r). half_basis is true
/// iff tau = (1 + sqrt(r))/2, in which case c = (r - 1)/4 and tau^2 = tau + c;
/// otherwise tau = sqrt(r) and tau^2 = r.
struct FieldParams {
    int64_t r = 0;
    int64_t d = 0;
    bool half_basis = false;
    int64_t c = 0;

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// x + y*tau with integer coordinates.
struct RingElement {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

/// Builds FieldParams from any integer radicand, reducing it to its
/// squarefree part first. Rejects 0 and perfect squares.
inline FieldParams make_field(int64_t n) {
    auto [r, s] = squarefree_reduce(n); // throws on n = 0
    if (r == 1)
        throw std::domain_error("make_field: " + std::to_string(n) +
                                " is a perfect square, not a valid radicand");
    FieldParams f;
    f.r = r;
    if (mod_floor(r, 4) == 1) {
        f.d = r;
        f.half_basis = true;
        f.c = (r - 1) / 4;
    } else {
        f.d = checked_mul(4, r);
        f.half_basis = false;
        f.c = 0;
    }
    return f;
}

/// Absolute norm |x^2 - r y^2|, or |x^2 + x y - c y^2| in the half basis.
inline int64_t norm(const FieldParams& f, RingElement z) {
    const int64_t x2 = checked_mul(z.x, z.x);
    const int64_t y2 = checked_mul(z.y, z.y);
    int64_t v;
    if (f.half_basis)
        v = checked_sub(checked_add(x2, checked_mul(z.x, z.y)), checked_mul(f.c, y2));
    else
        v = checked_sub(x2, checked_mul(f.r, y2));
    return v < 0 ? checked_neg(v) : v;
}

/// Product in the {1, tau} basis.
inline RingElement multiply(const FieldParams& f, RingElement a, RingElement b) {
    const int64_t cross = checked_add(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
    const int64_t yy = checked_mul(a.y, b.y);
    if (f.half_basis)
        return {checked_add(checked_mul(a.x, b.x), checked_mul(f.c, yy)),
                checked_add(cross, yy)};
    return {checked_add(checked_mul(a.x, b.x), checked_mul(f.r, yy)), cross};
}

/// Field conjugate: (x, -y) in the whole basis, (x + y, -y) in the half
/// basis (tau + conj(tau) = 1 there).
inline RingElement conjugate(const FieldParams& f, RingElement z) {
    if (f.half_basis) return {checked_add(z.x, z.y), checked_neg(z.y)};
    return {z.x, checked_neg(z.y)};
}

inline bool is_unit(const FieldParams& f, RingElement z) {
    return norm(f, z) == 1;
}

/// Necessary criterion for a real field Q(sqrt(r)) to be a UFD: either r is
/// prime, or r = p*q with p = 3 (mod 4) and q = 2 or q = 3 (mod 4).
/// The criterion is not sufficient (r = 79 satisfies it with class number 3).
inline bool ufd_candidate_real(int64_t r) {
    if (r <= 1) throw std::domain_error("ufd_candidate_real: radicand must exceed 1");
    Factorization f = factorize(r);
    for (auto [p, e] : f.factors)
        if (e > 1) throw std::domain_error("ufd_candidate_real: radicand must be squarefree");
    if (f.factors.size() == 1) return true;
    if (f.factors.size() != 2) return false;
    const int64_t a = f.factors[0].first;
    const int64_t b = f.factors[1].first;
    if (a == 2) return b % 4 == 3;
    return a % 4 == 3 && b % 4 == 3;
}

} // namespace quadprime
