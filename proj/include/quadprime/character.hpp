// Quadratic character chi_d(x) = (d/x) of a quadratic field, tabulated over
// one period and extended to all integers by periodicity and symmetry.
#pragma once

#include "quadprime/arithmetic.hpp"
#include "quadprime/field.hpp"

#include <climits>
#include <string>

namespace quadprime {

/// One period of chi_d, indexed by residue. Values are in {-1, 0, +1};
/// an entry is 0 exactly when the index shares a prime with d. Immutable
/// after construction; evaluation is thread-safe.
struct CharacterTable {
    int64_t d = 0;
    int64_t period = 0; // |d|, or 2|d| for the odd-number variant
    std::vector<std::int8_t> values;
};

namespace detail {

// Characters of the even discriminant factor e, one period each.
inline constexpr std::int8_t chi_e_minus4[4] = {0, 1, 0, -1};
inline constexpr std::int8_t chi_e_plus8[8] = {0, 1, 0, -1, 0, -1, 0, 1};
inline constexpr std::int8_t chi_e_minus8[8] = {0, 1, 0, 1, 0, -1, 0, -1};

} // namespace detail

/// Tabulates chi_d over 0 <= x < |d| as a pointwise product of factor
/// characters: for each odd prime p | d a table with 0 at zero, +1 at the
/// nonzero squares mod p and -1 elsewhere, and, when d = 0 (mod 4), the
/// fixed table of the factor e in {-4, +8, -8} selected by r mod 8.
/// Total work O(|d|) per factor.
inline CharacterTable build_character(const FieldParams& f) {
    const int64_t period = f.d < 0 ? checked_neg(f.d) : f.d;
    if (period > INT_MAX)
        throw std::length_error("build_character: period " + std::to_string(period) +
                                " exceeds 2^31-1");
    CharacterTable t;
    t.d = f.d;
    t.period = period;
    t.values.assign(static_cast<std::size_t>(period), 1);
    for (auto [p, e] : factorize(f.r).factors) {
        if (p == 2) continue;
        std::vector<std::int8_t> fac(static_cast<std::size_t>(p), -1);
        fac[0] = 0;
        for (int64_t n = 1; n < p; ++n)
            fac[static_cast<std::size_t>((n * n) % p)] = 1;
        for (int64_t x = 0; x < period; ++x)
            t.values[static_cast<std::size_t>(x)] =
                static_cast<std::int8_t>(t.values[static_cast<std::size_t>(x)] *
                                         fac[static_cast<std::size_t>(x % p)]);
    }
    if (mod_floor(f.d, 4) == 0) {
        const int64_t rm8 = mod_floor(f.r, 8);
        const std::int8_t* et;
        int64_t ep;
        if (rm8 == 3 || rm8 == 7) {
            et = detail::chi_e_minus4;
            ep = 4;
        } else if (rm8 == 2) {
            et = detail::chi_e_plus8;
            ep = 8;
        } else { // rm8 == 6
            et = detail::chi_e_minus8;
            ep = 8;
        }
        for (int64_t x = 0; x < period; ++x)
            t.values[static_cast<std::size_t>(x)] =
                static_cast<std::int8_t>(t.values[static_cast<std::size_t>(x)] *
                                         et[x % ep]);
    }
    return t;
}

/// chi_d(x) for any integer x: residue lookup for x >= 0; for x < 0 the
/// symmetric (d > 0) or anti-symmetric (d < 0) extension, which agrees with
/// the Kronecker symbol (d/x) everywhere.
inline int chi(const CharacterTable& t, int64_t x) {
    if (x >= 0) return t.values[static_cast<std::size_t>(x % t.period)];
    const int64_t m = -(x % t.period); // |x| mod period, safe at INT64_MIN
    const int v = t.values[static_cast<std::size_t>(m)];
    return t.d > 0 ? v : -v;
}

/// Variant table for stepping through odd numbers only: period 2|d| for odd
/// d, entries at odd indices equal to chi_d, even indices zero.
inline CharacterTable odd_character(const FieldParams& f) {
    if (mod_floor(f.d, 2) == 0)
        throw std::domain_error("odd_character: discriminant must be odd");
    const CharacterTable base = build_character(f);
    const int64_t period = checked_mul(2, base.period);
    if (period > INT_MAX)
        throw std::length_error("odd_character: period exceeds 2^31-1");
    CharacterTable t;
    t.d = f.d;
    t.period = period;
    t.values.assign(static_cast<std::size_t>(period), 0);
    for (int64_t x = 1; x < period; x += 2)
        t.values[static_cast<std::size_t>(x)] =
            base.values[static_cast<std::size_t>(x % base.period)];
    return t;
}

/// The table as a '+'/'-'/'0' symbol row, truncated to width entries
/// (width <= 0 means the full period).
inline std::string character_row(const CharacterTable& t, int64_t width = 0) {
    const int64_t n = (width <= 0 || width > t.period) ? t.period : width;
    std::string row;
    row.reserve(static_cast<std::size_t>(n));
    for (int64_t x = 0; x < n; ++x) {
        const int v = t.values[static_cast<std::size_t>(x)];
        row += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    return row;
}

} // namespace quadprime
